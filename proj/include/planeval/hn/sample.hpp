#pragma once
// Deterministic sampling: very general members of an equisingularity class
// and random row structures for corpus generation.

#include <cstdint>
#include <vector>

#include "planeval/hn/expansion.hpp"
#include "planeval/rng.hpp"

namespace planeval {

// Fills the free coefficient slots of a structure: first row uniform (zeros
// allowed), later free rows a nonzero leading slot and uniform slots after.
// The last free row of an irrational expansion is normalized instead (leading
// one, zeros after): its slots are gauge, not moduli. Rational coefficients
// are integers in [-999999, 999999].
HNExpansion sample_very_general(const HNExpansion& structure, const FieldSpec& field, std::uint64_t seed);

struct StructureOptions {
  long max_rows = 4;
  long max_h = 5;
  ValClass cls = ValClass::Divisorial;
};

HNExpansion random_structure(Rng& rng, const StructureOptions& opt);

}  // namespace planeval
