#include "cpcheck/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cpcheck {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("kraus file: " + msg);
}

// Reads "<tag> <value...>" with nothing left over.
std::istringstream line_reader(const std::string& line, const std::string& tag) {
  std::istringstream ls(line);
  std::string got;
  if (!(ls >> got) || got != tag) fail("expected \"" + tag + "\" line");
  return ls;
}

void expect_done(std::istringstream& ls, const std::string& tag) {
  std::string extra;
  if (ls >> extra) fail("trailing content on \"" + tag + "\" line");
}

}  // namespace

std::string render_kraus_file(const KrausFile& f) {
  std::ostringstream out;
  out << "kraus v1\n";
  out << "n " << f.n << "\n";
  out << "scalars exact-rational\n";
  out << "operators " << f.ops.size() << "\n";
  for (const auto& [op, weight] : f.ops) {
    out << "op " << rat_to_string(weight) << "\n";
    for (size_t r = 0; r < f.n; ++r) {
      for (size_t c = 0; c < f.n; ++c) out << (c ? " " : "") << entry_to_string(op(r, c));
      out << "\n";
    }
  }
  if (f.provenance) {
    const ReductionProvenance& p = *f.provenance;
    out << "provenance reduction\n";
    out << "expanded " << (p.expanded ? 1 : 0) << "\n";
    out << "L " << p.scale << "\n";
    out << "special";
    for (size_t v : p.special_indices) out << " " << v;
    out << "\n";
    out << "multiplicities";
    for (long v : p.multiplicities) out << " " << v;
    out << "\n";
    out << to_dimacs(p.cnf);
    out << "end\n";
  }
  return out.str();
}

KrausFile parse_kraus_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto next_line = [&](const char* what) -> std::string& {
    if (!std::getline(in, line)) fail(std::string("missing ") + what);
    return line;
  };

  if (next_line("header") != "kraus v1") fail("unsupported header");

  KrausFile f;
  {
    auto ls = line_reader(next_line("dimension"), "n");
    long n = -1;
    if (!(ls >> n) || n < 1) fail("bad dimension");
    expect_done(ls, "n");
    f.n = static_cast<size_t>(n);
  }
  if (next_line("scalar mode") != "scalars exact-rational") fail("unsupported scalar mode");

  size_t count = 0;
  {
    auto ls = line_reader(next_line("operator count"), "operators");
    long m = -1;
    if (!(ls >> m) || m < 0) fail("bad operator count");
    expect_done(ls, "operators");
    count = static_cast<size_t>(m);
  }

  for (size_t i = 0; i < count; ++i) {
    auto ls = line_reader(next_line("operator record"), "op");
    std::string wtoken;
    if (!(ls >> wtoken)) fail("missing weight");
    expect_done(ls, "op");
    Rat weight = rat_from_string(wtoken);
    Mat op(f.n, f.n);
    for (size_t r = 0; r < f.n; ++r) {
      std::istringstream row(next_line("matrix row"));
      for (size_t c = 0; c < f.n; ++c) {
        std::string token;
        if (!(row >> token)) fail("short matrix row");
        op(r, c) = entry_from_string(token);
      }
      expect_done(row, "matrix row");
    }
    f.ops.push_back({std::move(op), std::move(weight)});
  }

  if (!std::getline(in, line)) return f;
  while (line.empty() && std::getline(in, line)) {
  }
  if (line.empty()) return f;

  if (line != "provenance reduction") fail("unexpected content after operators");
  ReductionProvenance p;
  {
    auto ls = line_reader(next_line("expanded flag"), "expanded");
    int flag = -1;
    if (!(ls >> flag) || (flag != 0 && flag != 1)) fail("bad expanded flag");
    expect_done(ls, "expanded");
    p.expanded = flag == 1;
  }
  {
    auto ls = line_reader(next_line("scale"), "L");
    if (!(ls >> p.scale) || p.scale < 1) fail("bad scale");
    expect_done(ls, "L");
  }
  {
    auto ls = line_reader(next_line("special indices"), "special");
    long v;
    while (ls >> v) {
      if (v < 0) fail("bad special index");
      p.special_indices.push_back(static_cast<size_t>(v));
    }
  }
  {
    auto ls = line_reader(next_line("multiplicities"), "multiplicities");
    long v;
    while (ls >> v) p.multiplicities.push_back(v);
  }
  std::ostringstream dimacs;
  for (;;) {
    if (!std::getline(in, line)) fail("unterminated provenance block");
    if (line == "end") break;
    dimacs << line << "\n";
  }
  p.cnf = parse_dimacs(dimacs.str());
  f.provenance = std::move(p);

  while (std::getline(in, line))
    if (!line.empty()) fail("unexpected content after provenance");
  return f;
}

KrausFamily family_of(const KrausFile& f) { return make_family(f.n, f.ops); }

KrausFile file_of(const KrausFamily& family) {
  KrausFile f;
  f.n = family.n;
  f.ops = family.ops;
  return f;
}

KrausFile file_of(const ReducedInstance& inst, bool expanded) {
  KrausFile f;
  f.n = inst.family.n;
  f.ops = expanded ? expand_weights(inst.family).ops : inst.family.ops;
  ReductionProvenance p;
  p.cnf = inst.cnf;
  p.expanded = expanded;
  p.scale = inst.scale;
  p.special_indices = inst.special_indices;
  p.multiplicities = inst.multiplicities;
  f.provenance = std::move(p);
  return f;
}

ReducedInstance instance_of(const KrausFile& f) {
  if (!f.provenance) fail("no reduction provenance");
  const ReductionProvenance& p = *f.provenance;
  ReducedInstance inst = reduce_cnf_to_kraus(p.cnf);
  if (inst.scale != p.scale || inst.special_indices != p.special_indices ||
      inst.multiplicities != p.multiplicities)
    fail("provenance does not match its rebuilt reduction");
  const std::vector<WeightedOp>* expect = &inst.family.ops;
  KrausFamily flat;
  if (p.expanded) {
    flat = expand_weights(inst.family);
    expect = &flat.ops;
  }
  if (f.n != inst.family.n || f.ops.size() != expect->size())
    fail("stored operators do not match the rebuilt reduction");
  for (size_t i = 0; i < f.ops.size(); ++i)
    if (f.ops[i].weight != (*expect)[i].weight || !(f.ops[i].op == (*expect)[i].op))
      fail("stored operators do not match the rebuilt reduction");
  return inst;
}

std::string render_witness(const BilinearWitness& w) {
  std::ostringstream out;
  out << "witness v1\n";
  out << "n " << w.x.size() << "\n";
  out << "x";
  for (const auto& e : w.x) out << " " << entry_to_string(e);
  out << "\ny";
  for (const auto& e : w.y) out << " " << entry_to_string(e);
  out << "\n";
  return out.str();
}

BilinearWitness parse_witness(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto next_line = [&](const char* what) -> std::string& {
    if (!std::getline(in, line)) throw std::invalid_argument(std::string("witness file: missing ") + what);
    return line;
  };
  if (next_line("header") != "witness v1") throw std::invalid_argument("witness file: unsupported header");
  long n = -1;
  {
    std::istringstream ls(next_line("dimension"));
    std::string tag;
    if (!(ls >> tag >> n) || tag != "n" || n < 1) throw std::invalid_argument("witness file: bad dimension");
  }
  BilinearWitness w;
  for (auto* side : {&w.x, &w.y}) {
    std::istringstream ls(next_line("vector"));
    std::string tag;
    if (!(ls >> tag) || tag != (side == &w.x ? "x" : "y"))
      throw std::invalid_argument("witness file: bad vector tag");
    std::string token;
    while (ls >> token) side->push_back(entry_from_string(token));
    if (side->size() != static_cast<size_t>(n))
      throw std::invalid_argument("witness file: vector length mismatch");
  }
  return w;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
  if (!out.flush()) throw std::invalid_argument("write failed for " + path);
}

}  // namespace cpcheck
