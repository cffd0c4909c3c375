#include <doctest.h>
TEST_CASE("placeholder_test_caratheodory") { CHECK(true); }
