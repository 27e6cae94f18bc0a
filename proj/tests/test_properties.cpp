#include "property_checks.hpp"

#include <doctest.h>

using namespace ctrans::properties;

namespace {

void require(const PropertyResult& r) {
    INFO(r.name << ": " << r.failures << " of " << r.cases << " cases failed; first: " << r.first_failure);
    CHECK(r.cases > 0);
    CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("series ring laws") { require(ring_laws()); }
TEST_CASE("division round trip") { require(div_mul_round_trip()); }
TEST_CASE("reversion round trip") { require(reversion_round_trip()); }
TEST_CASE("expansion is deterministic") { require(expand_determinism()); }
TEST_CASE("Catalan identities") { require(catalan_identities()); }
TEST_CASE("Riordan group laws") { require(riordan_group_laws()); }
TEST_CASE("matrix view is a homomorphism") { require(matrix_homomorphism()); }
TEST_CASE("half entry identities") { require(half_identities()); }
TEST_CASE("C transform routes agree") { require(c_transform_agreement()); }
TEST_CASE("C transform round trips") { require(c_round_trips()); }
TEST_CASE("Riordan factorization identities") { require(riordan_identities()); }
TEST_CASE("Bareiss matches cofactor and rational elimination") { require(determinant_agreement()); }
TEST_CASE("rational fit recovers random GFs") { require(fit_recovery()); }
TEST_CASE("Hankel transform invariance") { require(hankel_invariance()); }
TEST_CASE("Narayana symmetry and row sums") { require(narayana_properties()); }
TEST_CASE("orthogonal polynomial quotient") { require(orthogonal_quotient()); }
