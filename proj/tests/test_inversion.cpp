#include <doctest.h>
TEST_CASE("placeholder_test_inversion") { CHECK(true); }
