#pragma once

#include <cstdint>

namespace sgl {

// Tunable bounds shared across the library. Defaults match the CLI defaults,
// so reports are reproducible without flags.
struct Limits {
  // Groups up to this order materialize a Cayley table; larger groups
  // (wreath products chiefly) stay structural.
  std::uint64_t table_bound = 4096;

  // Subgroup enumeration refuses groups above this order.
  std::uint64_t enum_bound = 512;

  // Homomorphisms with domains up to this order are verified on all pairs;
  // above it, on all (generator, element) pairs plus sampled random pairs.
  std::uint64_t verify_exhaustive_bound = 65536;

  // Hard cap on the order of any structural group (wreath towers).
  std::uint64_t structural_bound = std::uint64_t{1} << 20;

  // Brute-force oracle refuses groups above this order.
  std::uint64_t oracle_bound = 128;

  std::uint64_t sample_pairs = 1000000;
  std::uint64_t seed = 12345;

  // Tie-break ordering for "minimal" in decompositions. Both settings scan
  // candidates ascending by (order, lexicographic member set); the value is
  // recorded in reports.
  enum class Ordering { inclusion, order };
  Ordering ordering = Ordering::inclusion;
};

inline const char* ordering_name(Limits::Ordering o) {
  return o == Limits::Ordering::inclusion ? "inclusion" : "order";
}

}  // namespace sgl
