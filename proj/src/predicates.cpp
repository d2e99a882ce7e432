#include "autofrob/predicates.hpp"

#include <array>
#include <mutex>

#include "autofrob/error.hpp"

namespace autofrob {

namespace {

// Evil numbers >= 2m are exactly the evil numbers from index m on, and the
// same holds for odious numbers, so g thresholds the value at 2*m.
constexpr std::string_view kEvilDefs = R"script(
def evil123rep "Ej,k,l (T[j]=@0) & (T[k]=@0) & (T[l]=@0) &
     j>=m & k>=m & l>=m & (n=j | n=j+k | n=j+k+l)":
def evil4rep "Ei,j,k,l (T[i]=@0) & (T[j]=@0) & (T[k]=@0) & (T[l]=@0) &
     i>=m & j>=m & k>=m & l>=m & n=i+j+k+l":
def evilg "(Aj (j>n) => $evil123rep(2*m,j)) & ~$evil123rep(2*m,n)":
)script";

constexpr std::string_view kEvilChecks = R"script(
eval evilcheck "Am,n $evil4rep(m,n) => $evil123rep(m,n)":
eval upperb "Am,n $evilg(m,n) => n <= 6*m+7":
eval upperopt "Ai Em,n (m>i) & $evilg(m,n) & n=6*m+7":
eval lowerb "Am,n $evilg(m,n) => n >= 4*m":
eval loweropt "Ai Em,n (m>i) & $evilg(m,n) & n=4*m":
eval evilgdiff "Ai Ej,m,n1,n2 (j>=i) & $evilg(m,n1) & $evilg(m+1,n2) & n2=n1+j":
eval evalmonotone "Ai Ej,m,u (j>=i) & $evilg(m,u) &
   (At,v ((t>m) & (t<m+j) & $evilg(t,v)) => u=v)":
)script";

constexpr std::string_view kOdiousDefs = R"script(
def odious123rep "Ej,k,l (T[j]=@1) & (T[k]=@1) & (T[l]=@1) &
     j>=m & k>=m & l>=m & (n=j | n=j+k | n=j+k+l)":
def odious4rep "Ei,j,k,l (T[i]=@1) & (T[j]=@1) & (T[k]=@1) & (T[l]=@1) &
     i>=m & j>=m & k>=m & l>=m & n=i+j+k+l":
def odiousg "(Aj (j>n) => $odious123rep(2*m,j)) & ~$odious123rep(2*m,n)":
)script";

// G_o(0) = -1 shows up as n = 0, so the upper bound starts at m = 1.
constexpr std::string_view kOdiousChecks = R"script(
eval odiouscheck "Am,n $odious4rep(m,n) => $odious123rep(m,n)":
eval odiousupperb "Am,n ((m>=1) & $odiousg(m,n)) => n+1 <= 6*m":
eval odiousupperopt "Ai Em,n (m>i) & $odiousg(m,n) & n+1=6*m":
eval odiouslowerb "Am,n $odiousg(m,n) => n >= 4*m":
eval odiousloweropt "Ai Em,n (m>i) & $odiousg(m,n) & n=4*m":
)script";

constexpr std::string_view kLowerDefs = R"script(
def fibna "?msd_fib ((s=0)&(n=0)) | Et,u $fibinc(u,n) & $shift(u,t) &
     $fibinc(t,s)":
def lower12rep "?msd_fib Ej,k (F[j-1]=@0) & (F[k-1]=@0) &
     j>=m & k>=m & (n=j|n=j+k)":
def lower3rep "?msd_fib Ej,k,l (F[j-1]=@0) & (F[k-1]=@0) & (F[l-1]=@0) &
     j>=m & k>=m & l>=m & n=j+k+l":
def lowerunrep "?msd_fib (Aj (j>n) => $lower12rep(m,j)) & ~$lower12rep(m,n)":
def lowerg "?msd_fib Et $fibna(m,t) & $lowerunrep(t,n)":
def ldi "?msd_fib Am Et,u,v (t>=m) & $lowerg(t,u) & $lowerg(t+1,v) & v=u+d":
)script";

// lowerbinf1/2 only restate the bounds past every s. The attain checks use
// equalities, which is what "the bound is reached infinitely often" means.
constexpr std::string_view kLowerChecks = R"script(
eval fibcheck "?msd_fib Am An $lower3rep(m,n) => $lower12rep(m,n)":
eval lowerb1 "?msd_fib Am En,r $lowerg(m,n) & $fibna(m,r) & n+3>=2*r":
eval lowerb2 "?msd_fib Am En,r $lowerg(m,n) & $fibna(m,r) & n<=2*r+1":
eval lowerbinf1 "?msd_fib As Em,n,r (m>=s) & $lowerg(m,n) &
     $fibna(m,r) & n+3>=2*r":
eval lowerbinf2 "?msd_fib As Em,n,r (m>=s) & $lowerg(m,n) &
     $fibna(m,r) & n<=2*r+1":
eval lowerbattain1 "?msd_fib As Em,n,r (m>=s) & $lowerg(m,n) & $fibna(m,r) & n+3=2*r":
eval lowerbattain2 "?msd_fib As Em,n,r (m>=s) & $lowerg(m,n) & $fibna(m,r) & n=2*r+1":
eval lowerdiff "?msd_fib Am Eu,v $lowerg(m,u) & $lowerg(m+1,v) &
      (v=u|v=u+2|v=u+3|v=u+5|v=u+6|v=u+8)":
eval lowerdiffinfcheck "?msd_fib $ldi(0) & $ldi(2) & $ldi(3) & $ldi(5)
      & $ldi(6) & $ldi(8)":
)script";

// Four summands do not reduce to three when the threshold is 2 (8 = 2+2+2+2),
// so the representability test allows up to four; five always reduce to four.
constexpr std::string_view kUpperDefs = R"script(
def fibna2 "?msd_fib ((s=0)&(n=0)) | Et,u,v,w $fibinc(u,n) & $shift(u,t)
     & $shift(t,v) & $fibinc(v,w) & $fibinc(w,s)":
def upper123rep "?msd_fib Ej,k,l (F[j-1]=@1) & (F[k-1]=@1) & (F[l-1]=@1) &
     j>=m & k>=m & l>=m & (n=j | n=j+k | n=j+k+l)":
def upper4rep "?msd_fib Ei,j,k,l (F[i-1]=@1) & (F[j-1]=@1) & (F[k-1]=@1) & (F[l-1]=@1) &
     i>=m & j>=m & k>=m & l>=m & n=i+j+k+l":
def upper1234rep "?msd_fib $upper123rep(m,n) | $upper4rep(m,n)":
def upper5rep "?msd_fib Eh,i,j,k,l (F[h-1]=@1) & (F[i-1]=@1) & (F[j-1]=@1) & (F[k-1]=@1) & (F[l-1]=@1) &
     h>=m & i>=m & j>=m & k>=m & l>=m & n=h+i+j+k+l":
def upperunrep "?msd_fib (Aj (j>n) => $upper1234rep(m,j)) & ~$upper1234rep(m,n)":
def upperg "?msd_fib Et $fibna2(m,t) & $upperunrep(t,n)":
def udi "?msd_fib Am Et,u,v (t>=m) & $upperg(t,u) & $upperg(t+1,v) & v=u+d":
)script";

constexpr std::string_view kUpperChecks = R"script(
eval upper4check "?msd_fib Am,n ((m>=3) & $upper4rep(m,n)) => $upper123rep(m,n)":
eval upper4fails "?msd_fib $upper4rep(2,8) & ~$upper123rep(2,8)":
eval upper5check "?msd_fib Am,n $upper5rep(m,n) => $upper1234rep(m,n)":
eval uppergb1 "?msd_fib Am En,r $upperg(m,n) & $fibna2(m,r) & n+5>=3*r":
eval uppergb2 "?msd_fib Am En,r $upperg(m,n) & $fibna2(m,r) & n<=3*r+20":
eval upperbattain1 "?msd_fib As Em,n,r (m>=s) & $upperg(m,n) & $fibna2(m,r) & n+5=3*r":
eval upperbattain2 "?msd_fib As Em,n,r (m>=s) & $upperg(m,n) & $fibna2(m,r) & n=3*r+20":
eval upperdiff "?msd_fib Am (m>=1) => Eu,v $upperg(m,u) & $upperg(m+1,v) &
      (v=u|v=u+3|v=u+5|v=u+8|v=u+11|v=u+13|v=u+18|v=u+21|v=u+23|v=u+26|v=u+31)":
eval upperdiffinfcheck "?msd_fib $udi(0) & $udi(3) & $udi(5) & $udi(8) & $udi(11) & $udi(13)
      & $udi(18) & $udi(21) & $udi(23) & $udi(26) & $udi(31)":
)script";

std::size_t index_of(Family f) { return static_cast<std::size_t>(f); }

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Evil: return "evil";
    case Family::Odious: return "odious";
    case Family::Lower: return "lower";
    case Family::Upper: return "upper";
  }
  return "?";
}

std::optional<Family> family_by_name(std::string_view name) {
  for (Family f : kFamilies)
    if (family_name(f) == name) return f;
  return std::nullopt;
}

System family_system(Family f) {
  return f == Family::Evil || f == Family::Odious ? System::Base2 : System::Fibonacci;
}

std::string_view family_definitions(Family f) {
  switch (f) {
    case Family::Evil: return kEvilDefs;
    case Family::Odious: return kOdiousDefs;
    case Family::Lower: return kLowerDefs;
    case Family::Upper: return kUpperDefs;
  }
  return {};
}

std::string_view family_checks(Family f) {
  switch (f) {
    case Family::Evil: return kEvilChecks;
    case Family::Odious: return kOdiousChecks;
    case Family::Lower: return kLowerChecks;
    case Family::Upper: return kUpperChecks;
  }
  return {};
}

std::string_view g_predicate(Family f) {
  switch (f) {
    case Family::Evil: return "evilg";
    case Family::Odious: return "odiousg";
    case Family::Lower: return "lowerg";
    case Family::Upper: return "upperg";
  }
  return {};
}

const PredicateEnv& family_env(Family f) {
  static std::array<std::once_flag, 4> once;
  static std::array<PredicateEnv, 4> envs;
  const std::size_t k = index_of(f);
  std::call_once(once[k], [&] { envs[k] = run_script(family_definitions(f), builtin_env()).env; });
  return envs[k];
}

}  // namespace autofrob
