#include <doctest.h>

#include "gkit/ring.hpp"
#include "gkit/submodule.hpp"

using namespace gkit;

TEST_CASE("smoke") {
    Ring r = Ring::make(2, 2, {{2}});
    auto t = r.generator(0);
    CHECK(((r.one() + t) * (r.one() - t)).is_zero());
    CHECK(socle(r) == Ideal::generated(r, {(r.one() + t).scaled(2)}));
}
