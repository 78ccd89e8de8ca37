#pragma once

#include "onebridge/freeword.hpp"

#include <cstdint>

namespace onebridge::detail {

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

/// gen^e over `alphabet`, reduced.
inline GroupWord gpow(const AlphabetPtr& alphabet, int gen, std::int64_t e)
{
    return power(GroupWord::generator(alphabet, gen), e);
}

} // namespace onebridge::detail
