#include <doctest.h>
#include "laurentbi/series.hpp"
using namespace laurentbi;
TEST_CASE("smoke") {
    const MeromorphicMap g = MeromorphicMap::from_b(Domain::Exact, 8, {{1, Coefficient::exact_int(1)}});
    CHECK(g.b(1) == Coefficient::exact_int(1));
}
