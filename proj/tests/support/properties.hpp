#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace onebridge::test {

struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0; }
};

PropertyResult prop_free_group_laws(std::size_t cases);
PropertyResult prop_substitution_homomorphism(std::size_t cases);
PropertyResult prop_braid_relations(std::size_t cases);
PropertyResult prop_full_twist(std::size_t cases);
PropertyResult prop_burau_homomorphism(std::size_t cases);
PropertyResult prop_alexander_at_one(std::size_t cases);
PropertyResult prop_alexander_palindromic(std::size_t cases);

std::vector<PropertyResult> all_properties(std::size_t cases);

} // namespace onebridge::test
