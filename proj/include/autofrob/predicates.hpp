#pragma once

#include <optional>
#include <string_view>

#include "autofrob/logic.hpp"

namespace autofrob {

/// The four sequences whose tail Frobenius function is synchronized.
enum class Family { Evil, Odious, Lower, Upper };

inline constexpr Family kFamilies[] = {Family::Evil, Family::Odious, Family::Lower, Family::Upper};

std::string_view family_name(Family f);
std::optional<Family> family_by_name(std::string_view name);
System family_system(Family f);

/// Script of `def` statements ending in the G predicate.
std::string_view family_definitions(Family f);
/// Script of `eval` statements that should all be true over family_env(f).
std::string_view family_checks(Family f);
/// Name of the predicate g(m, n): n is the tail Frobenius number of index m,
/// with n = 0 standing for -1 (every value representable).
std::string_view g_predicate(Family f);

/// builtin_env() plus the family's definitions; compiled once per process.
const PredicateEnv& family_env(Family f);

}  // namespace autofrob
