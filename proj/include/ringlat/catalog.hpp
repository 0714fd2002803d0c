#ifndef RINGLAT_CATALOG_HPP
#define RINGLAT_CATALOG_HPP

#include "ringlat/serialize.hpp"

namespace ringlat {

/// Named instances with their expected verdicts embedded as metadata, so the
/// acceptance checks are data-driven. Parameterized names take a "name:k"
/// suffix (e.g. "ex1:3", "split:4,2", "ff:2,2").
///
/// Families:
///   ex1:m        k[x1..xm]/(xi^2) over GF(2), the unit line below it
///   ex2:m        k[x1..xm]/(xi^2, xi*xj) over GF(2)
///   split:n,q    the diagonal inside GF(q)^n
///   ff:q,e       GF(q) inside GF(q^e)
///   ex5          F_2(t) < F_2(t)[y,x], y^2 = t, x^2 = 0
///   remark7151   F_2(u) < F_2(u)[t,x], t^2 = 0, x^2 = u + t
///   ex3-two-var  F_2(u)(v) < F(x,y), x^2 = u, y^2 = v
///   prop7170:m   the ring R + J built from the square-zero ideal J
///   tower-partition:n   split:n,2 with the expected partition-lattice stats
ExtensionInstance catalog_example(const std::string& name);

std::vector<std::string> catalog_names();

/// Random-instance profile: S is a product of blocks drawn from
/// {split copies, truncated polynomial algebras, GF(q^e), monogenic
/// extensions}; R is generated over the unit line by random closed-up
/// elements. Deterministic per seed.
struct RandomProfile {
    std::vector<unsigned> primes = {2, 3, 5};
    size_t max_dim = 8;
};

ExtensionInstance random_extension(std::uint64_t seed, const RandomProfile& profile = {});

} // namespace ringlat

#endif
