#pragma once
#include <string>
#include <vector>

#include "grkoszul/module.hpp"
#include "grkoszul/quiver.hpp"

namespace grk {

// `.qalg` text. Errors carry "<source>:<line>: " prefixes.
QuiverPresentation parse_qalg(const std::string& text, const std::string& source = "<input>");
std::string write_qalg(const QuiverPresentation& q);

// Quiver representation: one matrix per arrow, dims[tgt] x dims[src].
// Optional grades list the grade of each basis vector per vertex.
struct QuiverRep {
  std::vector<std::size_t> dims;
  std::vector<Matrix> arrows;
  std::vector<std::vector<int>> grades;  // empty when ungraded
  bool operator==(const QuiverRep& o) const {
    return dims == o.dims && arrows == o.arrows && grades == o.grades;
  }
};

QuiverRep parse_qrep(const std::string& text, const QuiverPresentation& q, const std::string& source = "<input>");
std::string write_qrep(const QuiverRep& r, const QuiverPresentation& q);

// Module over an algebra built from q; throws InputError when a relation
// does not vanish.
Module module_from_rep(const AlgebraPtr& a, const QuiverRep& r);
QuiverRep rep_from_module(const Module& m);

std::string read_file(const std::string& path);

}  // namespace grk
