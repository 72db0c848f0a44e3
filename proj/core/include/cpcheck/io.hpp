#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpcheck/kraus.hpp"
#include "cpcheck/positivity.hpp"
#include "cpcheck/reduction.hpp"

namespace cpcheck {

// Echo of the reduction that produced a family, embedded in its file so
// certificates can be encoded and decoded later. The CNF is stored
// normalized; scale, special indices, and multiplicities are redundant and
// revalidated against a rebuild before use.
struct ReductionProvenance {
  Cnf cnf;
  bool expanded = false;
  long scale = 0;
  std::vector<size_t> special_indices;
  std::vector<long> multiplicities;
};

struct KrausFile {
  size_t n = 0;
  std::vector<WeightedOp> ops;
  std::optional<ReductionProvenance> provenance;
};

// Line-oriented text format, exact rationals only. parse(render(f)) == f,
// and render(parse(text)) == text for canonical text.
std::string render_kraus_file(const KrausFile& f);
KrausFile parse_kraus_file(const std::string& text);

KrausFamily family_of(const KrausFile& f);
KrausFile file_of(const KrausFamily& family);
KrausFile file_of(const ReducedInstance& inst, bool expanded);

// Rebuilds the instance from the provenance CNF and requires every stored
// field and operator to match the rebuild exactly.
ReducedInstance instance_of(const KrausFile& f);

std::string render_witness(const BilinearWitness& w);
BilinearWitness parse_witness(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cpcheck
