#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ashom/complex.hpp"
#include "ashom/coverings.hpp"
#include "ashom/errors.hpp"
#include "ashom/exact_sequence.hpp"
#include "ashom/towers.hpp"

namespace ashom {

/// Malformed JSON. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

/// Well-formed JSON that does not match the schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Matches the schema but breaks a structural invariant (delta delta != 0, a
/// tower map that is not a homomorphism).
class InvariantError : public Error {
 public:
  using Error::Error;
};

class FileError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path);

/// {"ranks": {"0": 3}, "deltas": {"0": [[...]]}}; delta^n has rank(n+1) rows.
IntegerCochainComplex parse_complex(std::string_view text);
/// {"points": [...], "closed": [...], "covers": {"name": [[...]]}}.
FiniteCoveredSpace parse_space(std::string_view text);
/// {"kind": "periodic", "group": G, "map": M, "prefix": [{"group": G, "map": M}], "link": M}
/// or {"kind": "finite", "groups": [G], "maps": [M]}, with G = {"rank": r, "torsion": [d]}.
Tower parse_tower(std::string_view text);

struct MilnorInput {
  int lo = 0;
  std::vector<Tower> towers;
  std::vector<FGAbelianGroup> limits;
};
/// {"lo": 0, "degrees": [{"tower": T, "limit": G}]}.
MilnorInput parse_milnor(std::string_view text);

/// {"G": G, "G1": G, "G2": G, "phi": M, "psi": M}.
GroupExtension parse_extension(std::string_view text);

/// Canonical serializations: two-space indentation, sorted keys, trailing newline.
std::string serialize(const IntegerCochainComplex& C);
std::string serialize(const FiniteCoveredSpace& S);
std::string serialize(const Tower& T);

}  // namespace ashom
