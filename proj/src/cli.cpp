#include "grkoszul/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <regex>
#include <sstream>

#include "grkoszul/alcove.hpp"
#include "grkoszul/cache.hpp"
#include "grkoszul/coxeter.hpp"
#include "grkoszul/errors.hpp"
#include "grkoszul/filtration.hpp"
#include "grkoszul/formats.hpp"
#include "grkoszul/grcompare.hpp"
#include "grkoszul/koszul.hpp"
#include "grkoszul/models.hpp"
#include "grkoszul/qha.hpp"
#include "grkoszul/report.hpp"
#include "grkoszul/selftest.hpp"
#include "grkoszul/subalgebra.hpp"
#include "grkoszul/weightpoly.hpp"

namespace grk {
namespace {

// Every flag any command may take; each subcommand binds the ones it reads.
struct Opts {
  std::string input, module, second, rep, output, which = "both";
  std::vector<std::string> gens, keep, weights;
  std::string lengths, lambda, nu, partition, x, w, weights_file, region;
  std::string type = "A";
  int rank = 1, max_degree = 12, max_length = 6, n = 1, m_max = 2, upto = -1;
  long e = 5, gldim = -1;
  unsigned jobs = 1;
  bool regular = false, no_cache = false;
};

QuiverPresentation load_presentation(const std::string& input) {
  if (input.rfind("model:", 0) == 0) return models::by_name(input.substr(6));
  return parse_qalg(read_file(input), input);
}

struct Loaded {
  QuiverPresentation q;
  AlgebraPtr a;
};

Loaded load(const std::string& input) {
  Loaded l{load_presentation(input), nullptr};
  l.a = build_algebra(l.q);
  return l;
}

int vertex_or_throw(const Algebra& a, const std::string& label) {
  int v = a.vertex_index(label);
  if (v < 0) throw InputError("unknown vertex '" + label + "'");
  return v;
}

std::string weight_label(const Algebra& a, int v) { return a.vertex_label(v); }

// P(v), L(v), Q(v), Delta(v), Nabla(v), optionally followed by /rad^r, or
// rep:<file> for a quiver representation.
Module resolve_module(const Loaded& l, const std::string& spec) {
  if (spec.rfind("rep:", 0) == 0) {
    const std::string path = spec.substr(4);
    return module_from_rep(l.a, parse_qrep(read_file(path), l.q, path));
  }
  static const std::regex re(R"(^(P|L|Q|Delta|Nabla)\(([^()]+)\)(/rad\^([0-9]+))?$)");
  std::smatch m;
  if (!std::regex_match(spec, m, re))
    throw InputError("bad module '" + spec + "': expected P(v), L(v), Q(v), Delta(v), Nabla(v) or rep:<file>");
  const std::string kind = m[1];
  const int v = vertex_or_throw(*l.a, m[2]);
  Module mod = kind == "P" ? projective(l.a, v) : simple_module(l.a, v);
  if (kind == "Q" || kind == "Delta" || kind == "Nabla") {
    auto h = standard_modules(l.a, poset_of(*l.a), duality_of(*l.a));
    mod = kind == "Q" ? h.injective[v] : kind == "Delta" ? h.standard[v] : h.costandard[v];
  }
  if (m[3].matched) {
    const std::size_t r = std::stoul(m[4]);
    mod = quotient(mod, rad_power(mod, r)).module;
  }
  return mod;
}

SubalgebraEmbedding sub_of(const AlgebraPtr& a, const std::vector<std::string>& gens) {
  std::vector<Vec> v;
  if (gens.empty())
    for (std::size_t b = 0; b < a->dim(); ++b) v.push_back(a->unit(static_cast<int>(b)));
  for (const auto& g : gens) v.push_back(parse_element(*a, g));
  return subalgebra_from_generators(a, v);
}

std::vector<long> lengths_for(const Algebra& a, const std::string& flag) {
  if (!flag.empty()) {
    std::vector<long> l = parse_weight(flag);
    if (l.size() != a.num_vertices())
      throw InputError("--lengths needs " + std::to_string(a.num_vertices()) + " entries");
    return l;
  }
  auto l = lengths_of(a);
  if (!l) throw InputError("no length function: tag every vertex with length= or pass --lengths");
  return *l;
}

std::vector<int> gamma_for(const Algebra& a, const std::vector<std::string>& keep) {
  std::vector<int> g;
  if (keep.empty())
    for (std::size_t v = 0; v < a.num_vertices(); ++v) g.push_back(static_cast<int>(v));
  for (const auto& k : keep) g.push_back(vertex_or_throw(a, k));
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

std::string dims_str(const std::vector<std::size_t>& d) { return join(d); }

std::string layers_str(const Algebra& a, const std::vector<std::size_t>& dims) {
  std::vector<std::string> parts;
  for (std::size_t v = 0; v < dims.size(); ++v)
    if (dims[v]) parts.push_back(a.vertex_label(static_cast<int>(v)) + (dims[v] > 1 ? "^" + std::to_string(dims[v]) : ""));
  return parts.empty() ? "0" : join(parts, " ");
}

RootDatum datum(const Opts& o) {
  if (o.type.size() != 1) throw InputError("--type takes one letter");
  return root_datum(static_cast<char>(std::toupper(static_cast<unsigned char>(o.type[0]))), o.rank);
}

Weight weight_flag(const RootDatum& rd, const std::string& text, const char* flag) {
  if (text.empty()) throw InputError(std::string(flag) + " is required");
  Weight w = parse_weight(text);
  if (static_cast<int>(w.size()) != rd.rank)
    throw InputError(std::string(flag) + " needs " + std::to_string(rd.rank) + " coordinates");
  return w;
}

void need_positive(long v, const char* flag) {
  if (v < 1) throw InputError(std::string(flag) + " must be positive");
}

WeightSet weights_for(const RootDatum& rd, const Opts& o) {
  WeightSet gens;
  if (!o.weights_file.empty()) gens = parse_weight_set(read_file(o.weights_file), rd.rank);
  for (const auto& w : o.weights) gens.push_back(weight_flag(rd, w, "--weight"));
  if (gens.empty()) throw InputError("no weights: pass --weight or --weights-file");
  for (const auto& g : gens)
    if (!is_dominant(g)) throw InputError("weight " + weight_str(g) + " is not dominant");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

// ---- algebra ----

Report cmd_build(const Opts& o) {
  Report r("algebra build");
  Loaded l = load(o.input);
  l.a->verify();
  const Algebra& a = *l.a;
  r.kv("field", a.field().name());
  r.kv("vertices", join(a.vertex_labels()));
  r.kv("arrows", l.q.arrows.size());
  r.kv("relations", l.q.relations.size());
  r.kv("dim", a.dim());
  if (a.graded()) r.kv("graded_dims", dims_str(a.graded_dims()));
  r.kv("loewy_length", a.loewy_length());
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    Module p = projective(l.a, static_cast<int>(v));
    r.kv("P." + a.vertex_label(static_cast<int>(v)) + ".dims", describe_dims(p));
  }
  r.kv("roundtrip", parse_qalg(write_qalg(l.q)) == l.q);
  return r;
}

Report cmd_gr(const Opts& o) {
  Report r("algebra gr");
  Loaded l = load(o.input);
  auto iso = gr_algebra_iso(l.a);
  r.kv("gr.graded_dims", dims_str(iso.graded_dims));
  if (!iso.own_dims.empty()) r.kv("graded_dims", dims_str(iso.own_dims));
  r.kv("iso", to_string(iso.verdict));
  if (!iso.reason.empty()) r.comment(iso.reason);
  auto t = tight_grading_check(*l.a);
  r.kv("tight", t.tight);
  if (!t.tight) r.kv("tight.failing", t.failing_clause);
  return r;
}

Report cmd_koszul(const Opts& o) {
  Report r("algebra koszul-check");
  Loaded l = load(o.input);
  auto k = koszul_check(l.a, o.max_degree, o.jobs);
  r.comment("koszul: " + k.summary());
  r.kv("koszul", k.koszul);
  r.kv("exact", k.exact);
  if (k.gldim) r.kv("gldim", *k.gldim);
  if (!k.witness.empty()) r.kv("witness", k.witness);
  if (!k.note.empty()) r.comment(k.note);
  for (const auto& s : k.simples) {
    const std::string key = "simple." + l.a->vertex_label(s.vertex);
    r.kv(key + ".linear", s.linear);
    r.kv(key + ".steps", s.steps);
    if (s.pd) r.kv(key + ".pd", *s.pd);
    if (s.periodic) r.kv(key + ".periodic", true);
  }
  return r;
}

Report cmd_subalgebra(const Opts& o) {
  Report r("algebra subalgebra");
  Loaded l = load(o.input);
  auto s = sub_of(l.a, o.gens);
  r.kv("sub.dim", s.sub->dim());
  r.kv("sub.vertices", s.sub->num_vertices());
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    std::vector<std::string> labels;
    for (int v : s.blocks[i]) labels.push_back(l.a->vertex_label(v));
    r.kv("block." + std::to_string(i), join(labels));
  }
  r.kv("normal", s.normal);
  auto t = tight_grading_check(*s.sub);
  r.kv("sub.tight", t.tight);
  auto k = koszul_check(s.sub, o.max_degree, o.jobs);
  r.kv("sub.koszul", k.summary());
  return r;
}

Report cmd_radgen(const Opts& o) {
  Report r("algebra radgen-check");
  Loaded l = load(o.input);
  auto s = sub_of(l.a, o.gens);
  auto g = radical_generation_check(s);
  r.kv("holds", g.holds);
  r.kv("dim_generated", g.dim_generated);
  r.kv("dim_radical", g.dim_radical);
  return r;
}

// ---- module ----

Report cmd_slices(const Opts& o) {
  Report r("module slices");
  Loaded l = load(o.input);
  Module m = resolve_module(l, o.module);
  r.kv("dim", m.dim());
  r.kv("loewy_length", loewy_length(m));
  auto rad = radical_layers(m);
  for (std::size_t i = 0; i < rad.size(); ++i) r.kv("rad." + std::to_string(i), layers_str(*l.a, rad[i]));
  auto soc = socle_layers(m);
  for (std::size_t i = 0; i < soc.size(); ++i) r.kv("soc." + std::to_string(i), layers_str(*l.a, soc[i]));
  return r;
}

Report cmd_resolve(const Opts& o) {
  Report r("module resolve");
  Loaded l = load(o.input);
  Module m = resolve_module(l, o.module);
  auto res = minimal_resolution(m, static_cast<std::size_t>(o.max_degree));
  for (std::size_t n = 0; n < res.length(); ++n) {
    std::vector<std::string> parts;
    const auto& t = res.terms[n];
    for (std::size_t k = 0; k < t.rank(); ++k) {
      std::string s = "P(" + l.a->vertex_label(t.vertex[k]) + ")";
      if (m.graded() && t.shift[k]) s += "<" + std::to_string(t.shift[k]) + ">";
      parts.push_back(s);
    }
    r.kv("P." + std::to_string(n), parts.empty() ? "0" : join(parts, " "));
  }
  r.kv("terminated", res.terminated);
  if (auto pd = res.pd()) r.kv("pd", *pd);
  return r;
}

Report cmd_ext(const Opts& o) {
  Report r("module ext");
  Loaded l = load(o.input);
  Module m = resolve_module(l, o.module), n = resolve_module(l, o.second);
  const std::size_t upto = o.upto >= 0 ? static_cast<std::size_t>(o.upto) : l.a->num_vertices() + 2;
  auto d = ext_upto(m, n, upto);
  for (std::size_t k = 0; k < d.size(); ++k) r.kv("ext." + std::to_string(k), d[k]);
  return r;
}

Report cmd_grcompare(const Opts& o) {
  Report r("module grcompare");
  Loaded l = load(o.input);
  Module m = resolve_module(l, o.module);
  std::optional<SubalgebraEmbedding> sub;
  if (!o.gens.empty()) sub = sub_of(l.a, o.gens);
  auto g = gr_ext1_compare(m, sub ? &*sub : nullptr);
  for (const auto& row : g.rows) {
    const std::string key = "ext1." + l.a->vertex_label(row.vertex);
    r.kv(key + ".A", row.over_a);
    r.kv(key + ".grA", row.over_gr);
    if (row.over_sub) r.kv(key + ".sub", *row.over_sub);
  }
  for (const auto& t : g.truncations) {
    r.kv("truncation." + std::to_string(t.r) + ".injective", t.injective);
  }
  r.kv("all_equal", g.all_equal);
  if (sub) r.kv("sub_bound", g.sub_bound);
  return r;
}

Report cmd_restrict(const Opts& o) {
  Report r("module restrict");
  Loaded l = load(o.input);
  Module m = resolve_module(l, o.module);
  auto s = sub_of(l.a, o.gens);
  auto rr = restrict_iso_check(m, s);
  r.kv("iso", to_string(rr.iso.verdict));
  if (!rr.iso.reason.empty()) r.comment(rr.iso.reason);
  r.kv("ext1", join(rr.ext1));
  r.kv("restricted_projective", rr.restricted_projective);
  return r;
}

// ---- qha ----

HighestWeight hw_of(const Loaded& l) { return standard_modules(l.a, poset_of(*l.a), duality_of(*l.a)); }

Report cmd_standard(const Opts& o) {
  Report r("qha standard");
  Loaded l = load(o.input);
  auto h = hw_of(l);
  for (std::size_t v = 0; v < h.size(); ++v) {
    const std::string key = weight_label(*l.a, static_cast<int>(v));
    r.kv("P." + key, describe_dims(h.proj[v]));
    r.kv("Delta." + key, describe_dims(h.standard[v]));
    r.kv("Nabla." + key, describe_dims(h.costandard[v]));
  }
  return r;
}

std::string sections_str(const Algebra& a, const DeltaFiltration& f) {
  std::vector<std::string> parts;
  for (const auto& s : f.sections) {
    std::string t = "Delta(" + a.vertex_label(s.weight) + ")";
    if (s.shift) t += "<" + std::to_string(s.shift) + ">";
    parts.push_back(t);
  }
  return join(parts, " ");
}

Report cmd_check(const Opts& o) {
  Report r("qha check");
  Loaded l = load(o.input);
  auto h = hw_of(l);
  auto q = qha_check(h);
  r.kv("qha", q.qha);
  if (!q.failure.empty()) r.kv("failure", q.failure);
  std::vector<std::string> chain;
  for (int v : q.chain_order) chain.push_back(l.a->vertex_label(v));
  if (!chain.empty()) r.kv("chain", join(chain));
  if (!q.chain_dims.empty()) r.kv("chain_dims", dims_str(q.chain_dims));
  for (std::size_t v = 0; v < q.filtrations.size(); ++v)
    if (q.filtrations[v].found) r.kv("filtration." + l.a->vertex_label(static_cast<int>(v)), sections_str(*l.a, q.filtrations[v]));
  if (q.gldim) r.kv("gldim", *q.gldim);
  if (!q.qha) throw HypothesisError("not quasi-hereditary: " + q.failure);
  return r;
}

Report cmd_truncate(const Opts& o) {
  Report r("qha truncate");
  Loaded l = load(o.input);
  auto h = hw_of(l);
  auto gamma = gamma_for(*l.a, o.keep);
  if (!h.poset.is_ideal(gamma)) throw HypothesisError("kept weights do not form an ideal of the order");
  auto t = truncate(h, gamma);
  r.kv("dim", t.q.quotient->dim());
  std::vector<std::string> labels;
  for (int v : t.gamma) labels.push_back(l.a->vertex_label(v));
  r.kv("gamma", join(labels));
  r.kv("ext_verified", t.ext_verified);
  auto q = qha_check(t.h);
  r.kv("qha", q.qha);
  if (q.gldim) r.kv("gldim", *q.gldim);
  return r;
}

Report cmd_reciprocity(const Opts& o) {
  Report r("qha reciprocity");
  Loaded l = load(o.input);
  auto h = hw_of(l);
  auto rep = orthogonality_reciprocity_check(h);
  for (const auto& [k, d] : rep.table)
    r.kv("ext." + l.a->vertex_label(k.first) + "." + l.a->vertex_label(k.second), dims_str(d));
  r.kv("orthogonal", rep.orthogonal);
  r.kv("upto", rep.upto);
  r.kv("reciprocity", rep.reciprocity);
  for (const auto& e : rep.entries) {
    std::string key = "recip." + l.a->vertex_label(e.mu) + "." + l.a->vertex_label(e.tau);
    if (rep.graded) key += "." + std::to_string(e.s);
    r.kv(key, std::to_string(e.nabla_mult) + "," + std::to_string(e.hom_dim) + "," + std::to_string(e.delta_mult));
  }
  return r;
}

Report cmd_parity(const Opts& o) {
  Report r("qha parity");
  Loaded l = load(o.input);
  auto h = hw_of(l);
  auto p = parity_checks(h, lengths_for(*l.a, o.lengths));
  r.kv("kl", p.kl);
  if (!p.kl_witness.empty()) r.kv("kl.witness", p.kl_witness);
  r.kv("skl", p.skl);
  if (!p.skl_witness.empty()) r.kv("skl.witness", p.skl_witness);
  if (p.graded_kl) {
    r.kv("graded_kl", *p.graded_kl);
    if (!p.graded_witness.empty()) r.kv("graded_kl.witness", p.graded_witness);
  }
  r.kv("duality_used", p.duality_used);
  r.kv("upto", p.upto);
  return r;
}

Report cmd_klpoly(const Opts& o) {
  Report r("qha klpoly");
  Loaded l = load(o.input);
  auto h = hw_of(l);
  auto c = category_kl_and_dual(h, lengths_for(*l.a, o.lengths));
  for (const auto& [k, p] : c.p) r.kv("P." + l.a->vertex_label(k.first) + "." + l.a->vertex_label(k.second), p.str());
  if (!c.p_right.empty()) r.kv("left_equals_right", c.left_equals_right);
  return r;
}

Report cmd_dual(const Opts& o) {
  Report r("qha dual");
  Loaded l = load(o.input);
  auto h = hw_of(l);
  auto c = category_kl_and_dual(h, lengths_for(*l.a, o.lengths));
  r.kv("dual.degrees", dims_str(c.dual_degrees));
  r.kv("dual.dim", c.dual_dim());
  r.kv("dual.complete", c.dual_complete);
  r.kv("gr.dual.degrees", dims_str(c.gr_dual_degrees));
  r.kv("match", c.duals_match);
  return r;
}

Report cmd_pipeline(const Opts& o) {
  Report r("qha pipeline");
  Loaded l = load(o.input);
  auto h = hw_of(l);
  auto s = sub_of(l.a, o.gens);
  auto p = pipeline_checks(h, s, gamma_for(*l.a, o.keep), lengths_for(*l.a, o.lengths));
  r.kv("hyp.sub_tight", p.sub_tight);
  r.kv("hyp.radgen", p.radgen);
  r.kv("hyp.sub_normal", p.sub_normal);
  r.kv("hyp.projective_restriction", p.projective_restriction);
  r.kv("hyp.kl_truncation", p.kl_truncation);
  r.kv("verdict", p.main_verdict);
  if (!p.failed.empty()) r.kv("failed", join(p.failed, ";"));
  r.kv("elementary.sub_koszul", p.sub_koszul);
  r.kv("elementary.radgen", p.radgen_b);
  r.kv("elementary.projective", p.b_projective);
  r.kv("elementary.verdict", p.elementary_verdict);
  if (!p.failed_elementary.empty()) r.kv("elementary.failed", join(p.failed_elementary, ";"));
  r.kv("direct.gr_qha", p.gr_qha);
  r.kv("direct.gr_standards_match", p.gr_standards_match);
  r.kv("direct.skl", p.skl);
  r.kv("direct.gr_standards_linear", p.gr_standards_linear);
  r.kv("direct.kl_polys_preserved", p.kl_polys_preserved);
  r.kv("direct.gr_koszul", p.gr_koszul);
  return r;
}

// ---- alcove ----

Report cmd_roots(const Opts& o) {
  Report r("alcove roots");
  RootDatum rd = datum(o);
  r.kv("name", rd.name());
  r.kv("positive_roots", rd.num_positive());
  r.kv("h", rd.h);
  r.kv("rho", weight_str(rd.rho));
  r.kv("highest_short", weight_str(rd.roots_w[rd.highest_short]));
  for (std::size_t k = 0; k < rd.num_positive(); ++k) r.kv("root." + std::to_string(k), join(rd.roots[k]));
  std::vector<std::string> rows;
  for (const auto& row : rd.w0) rows.push_back(join(row));
  r.kv("w0", join(rows, ";"));
  return r;
}

Report cmd_linkage(const Opts& o) {
  Report r("alcove linkage");
  RootDatum rd = datum(o);
  need_positive(o.e, "--e");
  Weight lam = weight_flag(rd, o.lambda, "--lambda");
  auto k = linkage(rd, o.e, lam);
  r.kv("minus", weight_str(k.minus));
  r.kv("length", k.length);
  r.kv("singular", k.singular);
  r.kv("facet", join(k.facet));
  if (is_dominant(lam)) {
    r.kv("regular", is_regular(rd, o.e, lam));
    if (!k.singular) r.kv("d", k.d);
    auto [l0, l1] = restricted_decomposition(o.e, lam);
    r.kv("restricted", weight_str(l0));
    r.kv("quotient", weight_str(l1));
  }
  return r;
}

Report cmd_fatten(const Opts& o) {
  Report r("alcove fatten");
  RootDatum rd = datum(o);
  need_positive(o.e, "--e");
  WeightSet psi = ideal_closure(rd, weights_for(rd, o), o.regular ? o.e : 0);
  auto f = fatten(rd, o.e, psi, o.n, o.regular);
  for (std::size_t m = 0; m < f.levels.size(); ++m) {
    const std::string key = "level." + std::to_string(static_cast<long>(m) - 1);
    r.kv(key + ".size", f.levels[m].size());
    r.kv(key + ".a1", f.a1[m]);
  }
  r.kv("efat.literal", f.efat_literal);
  if (!f.literal_missing.empty()) r.kv("efat.literal.missing", f.literal_missing);
  r.kv("efat.operational", f.efat_operational);
  if (!f.operational_missing.empty()) r.kv("efat.operational.missing", f.operational_missing);
  return r;
}

Report cmd_bounds(const Opts& o) {
  Report r("alcove bounds");
  RootDatum rd = datum(o);
  need_positive(o.e, "--p");
  WeightSet gamma = ideal_closure(rd, weights_for(rd, o), o.regular ? o.e : 0);
  std::optional<long> n;
  if (o.gldim >= 0) n = o.gldim;
  auto b = bounds_report(rd, o.e, gamma, o.m_max, n, o.regular);
  r.kv("size", gamma.size());
  r.kv("h", b.h);
  r.kv("jantzen_bound", b.jantzen_bound);
  std::size_t inside = 0;
  for (const auto& [w, in] : b.jantzen) inside += in;
  r.kv("jantzen_members", inside);
  r.kv("a1", b.a1_gamma);
  r.kv("a1.0", b.a1_gamma0);
  r.kv("lemma.a", b.lemma_a);
  r.kv("lemma.b", b.lemma_b);
  r.kv("all_regular", b.all_regular);
  if (b.all_regular) {
    r.kv("max_d", b.max_d);
    r.kv("gldim_bound", b.gldim_bound);
    if (n) r.kv("gldim_bound_holds", b.gldim_bound >= *n);
  }
  for (const auto& g : b.growth) {
    const std::string key = "growth." + std::to_string(g.m);
    r.kv(key, std::to_string(g.lhs) + "<=" + std::to_string(g.rhs));
    r.kv(key + ".holds", g.holds);
    r.kv(key + ".strict", g.strict);
  }
  r.kv("in_res", b.in_res);
  for (const auto& c : b.corollary) {
    const std::string key = "corollary." + std::to_string(c.m);
    r.kv(key + ".p_hypothesis", c.p_hypothesis);
    r.kv(key + ".holds", c.holds);
    if (c.pair_holds) r.kv(key + ".pair_holds", *c.pair_holds);
  }
  r.kv("threshold.2h-2", b.threshold_2h2);
  r.kv("threshold.4h-5", b.threshold_4h5);
  if (b.threshold_n) r.kv("threshold.N", *b.threshold_n);
  return r;
}

Report cmd_partition(const Opts& o) {
  Report r("alcove partition");
  need_positive(o.e, "--e");
  if (o.n < 2) throw InputError("--n must be at least 2");
  auto p = partition_translate(o.n, parse_weight(o.partition), o.e);
  r.kv("weight", weight_str(p.weight));
  r.kv("chamber_regular", p.chamber_regular);
  return r;
}

// ---- kl ----

Report cmd_table(const Opts& o) {
  Report r("kl table");
  RootDatum rd = datum(o);
  need_positive(o.e, "--e");
  if (o.max_length < 0) throw InputError("--max-length must be non-negative");
  if (o.which != "P" && o.which != "Q" && o.which != "both") throw InputError("--which is P, Q or both");
  const std::string key = "kl-table " + rd.name() + " e=" + std::to_string(o.e) +
                          " len=" + std::to_string(o.max_length) + " which=" + o.which + " v=" + kVersion;
  TextCache cache;
  std::optional<std::string> body;
  if (!o.no_cache) body = cache.get(key);
  if (!body) {
    CoxeterTable ct(rd, o.e, o.max_length);
    auto kl = kl_tables(ct);
    if (!kl.inversion_ok || !kl.parity_ok || !kl.degree_ok)
      throw InvariantError("KL table check failed: " + kl.failure);
    Report b("");
    b.kv("elements", ct.size());
    b.kv("counts", join(ct.counts_by_length()));
    b.kv("inversion", kl.inversion_ok);
    b.kv("parity", kl.parity_ok);
    b.kv("degree_bound", kl.degree_ok);
    std::ostringstream os;
    for (const auto& line : b.lines()) os << line << "\n";
    auto dump = [&](const char* tag, const std::vector<std::vector<Laurent>>& polys) {
      std::istringstream in(dump_table(ct, polys));
      for (std::string line; std::getline(in, line);) os << tag << line << "\n";
    };
    if (o.which != "Q") dump("P", kl.p);
    if (o.which != "P") dump("Q", kl.q);
    body = os.str();
    if (!o.no_cache) cache.put(key, *body);
  }
  std::istringstream in(*body);
  for (std::string line; std::getline(in, line);) {
    auto eq = line.find('=');
    if (eq == std::string::npos) throw InvariantError("malformed table line");
    r.kv(line.substr(0, eq), line.substr(eq + 1));
  }
  return r;
}

Report cmd_inverse(const Opts& o) {
  Report r("kl inverse");
  RootDatum rd = datum(o);
  need_positive(o.e, "--e");
  if (o.x.empty() || o.w.empty()) throw InputError("--x and --w are required");
  const long len = static_cast<long>(std::max(o.x.size(), o.w.size()));
  CoxeterTable ct(rd, o.e, static_cast<int>(len));
  int x = ct.find_word(o.x), w = ct.find_word(o.w);
  if (x < 0) throw InputError("word '" + o.x + "' is not reduced or uses an unknown generator");
  if (w < 0) throw InputError("word '" + o.w + "' is not reduced or uses an unknown generator");
  auto kl = kl_tables(ct);
  r.kv("x", ct.word(x));
  r.kv("w", ct.word(w));
  r.kv("leq", ct.leq(x, w));
  r.kv("P", kl.p[x][w].str());
  r.kv("Q", kl.q[x][w].str());
  // sum over x <= y <= w of (-1)^(l(w)-l(y)) Q_{x,y} P_{y,w}
  Laurent s;
  for (std::size_t y = 0; y < ct.size(); ++y) {
    const int yi = static_cast<int>(y);
    if (!ct.leq(x, yi) || !ct.leq(yi, w)) continue;
    Laurent term = kl.q[x][yi] * kl.p[yi][w];
    s += (ct.length(w) - ct.length(yi)) % 2 ? -term : term;
  }
  r.kv("inversion_sum", s.str());
  r.kv("inversion", s == (x == w ? Laurent::one() : Laurent()));
  return r;
}

Report cmd_weightpoly(const Opts& o) {
  Report r("kl weightpoly");
  RootDatum rd = datum(o);
  need_positive(o.e, "--e");
  Weight nu = weight_flag(rd, o.nu, "--nu"), lam = weight_flag(rd, o.lambda, "--lambda");
  auto p = weight_polynomials(rd, o.e, nu, lam);
  r.kv("linked", p.linked);
  r.kv("length.nu", p.l_nu);
  r.kv("length.lambda", p.l_lambda);
  if (p.linked) {
    r.kv("P", p.p.str());
    r.kv("Q", p.q.str());
    if (p.q_dominant) r.kv("Q.dominant", p.q_dominant->str());
  }
  return r;
}

Report cmd_predict(const Opts& o, const std::string& name) {
  Report r(name);
  RootDatum rd = datum(o);
  need_positive(o.e, "--e");
  Weight lam = weight_flag(rd, o.lambda, "--lambda");
  std::optional<WeightSet> gamma;
  if (!o.weights_file.empty() || !o.weights.empty()) gamma = ideal_closure(rd, weights_for(rd, o));
  auto p = predict_layers(rd, o.e, lam, gamma ? &*gamma : nullptr);
  r.kv("length", p.length);
  if (p.semisimple_series) r.comment("lambda is singular: the prediction is not covered by the regular theory");
  auto layers = p.layers();
  for (std::size_t n = 0; n < layers.size(); ++n) {
    std::vector<std::string> parts;
    for (const auto& [nu, m] : layers[n]) parts.push_back(weight_str(nu) + (m > 1 ? "^" + std::to_string(m) : ""));
    r.kv("layer." + std::to_string(n), parts.empty() ? "0" : join(parts, " "));
  }
  for (const auto& [nu, q] : p.q) r.kv("Q." + weight_str(nu), q.str());
  return r;
}

Report cmd_lcf(const Opts& o) {
  Report r("kl lcf");
  RootDatum rd = datum(o);
  need_positive(o.e, "--e");
  Weight lam = weight_flag(rd, o.lambda, "--lambda");
  if (!o.region.empty()) {
    if (o.region != "jantzen") throw InputError("--region takes only 'jantzen'");
    const long bound = o.e * (o.e - rd.h + 2);
    if (rd.pair_highest(add(lam, rd.rho)) > bound)
      throw HypothesisError("lambda lies outside the Jantzen region: (lambda+rho, alpha_0^vee) > " + std::to_string(bound));
  }
  auto res = lcf_character(rd, o.e, lam);
  for (const auto& [mu, c] : res.terms) r.kv("term." + weight_str(mu), c);
  for (const auto& [v, m] : res.ch)
    if (is_dominant(v)) r.kv("ch." + weight_str(v), m);
  r.kv("dim", res.dim);
  r.kv("weyl_dim", res.weyl_dim);
  r.kv("nonnegative", res.nonnegative);
  if (!res.nonnegative) r.kv("violation", res.violation);
  return r;
}

Report cmd_selftest(std::ostream& err) {
  Report r("selftest");
  auto s = run_selftest();
  for (const auto& c : s.checks) {
    r.kv("check." + c.name, c.pass);
    if (!c.pass) r.comment(c.name + ": " + c.detail);
  }
  r.kv("passed", s.ok());
  err << "selftest runtime " << s.seconds << " s\n";
  if (!s.ok()) {
    std::ostringstream os;
    for (const auto& c : s.checks)
      if (!c.pass) os << " " << c.name;
    throw InvariantError("selftest failed:" + os.str());
  }
  return r;
}

void echo_params(Report& r, const CLI::App* leaf) {
  for (const CLI::Option* opt : leaf->get_options()) {
    std::string name = opt->get_name();
    if (name.empty() || name == "--help") continue;
    while (!name.empty() && name[0] == '-') name.erase(0, 1);
    if (opt->count()) {
      r.param(name, join(opt->results(), " "));
    } else if (!opt->get_default_str().empty()) {
      r.param(name, opt->get_default_str());
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded and Koszul structure of quasi-hereditary algebras, with affine KL combinatorics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Opts o;
  std::function<Report()> action;
  CLI::App* leaf = nullptr;

  auto leaf_cmd = [&](CLI::App* group, const std::string& name, const std::string& help, auto fn) {
    CLI::App* c = group->add_subcommand(name, help);
    c->callback([&, c, fn] {
      leaf = c;
      action = [&o, fn] { return fn(o); };
    });
    return c;
  };
  auto input = [&](CLI::App* c) { c->add_option("input", o.input, ".qalg file or model:<name>")->required(); };
  auto jobs = [&](CLI::App* c) { c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u)); };
  auto gens = [&](CLI::App* c) {
    c->add_option("--gen", o.gens, "subalgebra generator as a path expression (repeatable)");
  };
  auto lengths = [&](CLI::App* c) { c->add_option("--lengths", o.lengths, "length function, comma separated"); };
  auto lie = [&](CLI::App* c, const char* eflag = "--e") {
    c->add_option("--type", o.type, "Cartan type")->capture_default_str();
    c->add_option("--rank", o.rank, "rank")->capture_default_str()->check(CLI::Range(1, 16));
    c->add_option(eflag, o.e, eflag[2] == 'p' ? "prime p" : "level e")->capture_default_str();
  };
  auto weight_sets = [&](CLI::App* c) {
    c->add_option("--weight", o.weights, "generating dominant weight (repeatable)");
    c->add_option("--weights-file", o.weights_file, "file of generating weights");
  };

  CLI::App* alg = app.add_subcommand("algebra", "algebras given by quivers with relations");
  alg->require_subcommand(1);
  input(leaf_cmd(alg, "build", "build and verify the algebra", cmd_build));
  input(leaf_cmd(alg, "gr", "associated graded algebra", cmd_gr));
  {
    auto* c = leaf_cmd(alg, "koszul-check", "Koszulity of the algebra or of gr A", cmd_koszul);
    input(c);
    c->add_option("--max-degree", o.max_degree, "resolution length bound")->capture_default_str();
    jobs(c);
  }
  {
    auto* c = leaf_cmd(alg, "subalgebra", "subalgebra generated by elements", cmd_subalgebra);
    input(c);
    gens(c);
    c->add_option("--max-degree", o.max_degree, "resolution length bound")->capture_default_str();
    jobs(c);
  }
  {
    auto* c = leaf_cmd(alg, "radgen-check", "does (rad a) A equal rad A", cmd_radgen);
    input(c);
    gens(c);
  }

  CLI::App* mod = app.add_subcommand("module", "modules: P(v), L(v), Q(v), Delta(v), Nabla(v), /rad^r, rep:<file>");
  mod->require_subcommand(1);
  auto module_arg = [&](CLI::App* c) {
    input(c);
    c->add_option("module", o.module, "module")->required();
  };
  module_arg(leaf_cmd(mod, "slices", "radical and socle layers", cmd_slices));
  {
    auto* c = leaf_cmd(mod, "resolve", "minimal projective resolution", cmd_resolve);
    module_arg(c);
    c->add_option("--max-degree", o.max_degree, "number of terms")->capture_default_str();
  }
  {
    auto* c = leaf_cmd(mod, "ext", "dimensions of Ext^n(M, N)", cmd_ext);
    module_arg(c);
    c->add_option("second", o.second, "second module")->required();
    c->add_option("--upto", o.upto, "highest degree");
  }
  {
    auto* c = leaf_cmd(mod, "grcompare", "Ext^1 over A against Ext^1 over gr A", cmd_grcompare);
    module_arg(c);
    gens(c);
  }
  {
    auto* c = leaf_cmd(mod, "restrict", "restriction to a subalgebra", cmd_restrict);
    module_arg(c);
    gens(c);
  }

  CLI::App* qha = app.add_subcommand("qha", "quasi-hereditary structure");
  qha->require_subcommand(1);
  input(leaf_cmd(qha, "standard", "standard and costandard modules", cmd_standard));
  input(leaf_cmd(qha, "check", "quasi-hereditary check", cmd_check));
  {
    auto* c = leaf_cmd(qha, "truncate", "truncation to an ideal of weights", cmd_truncate);
    input(c);
    c->add_option("--keep", o.keep, "weight to keep (repeatable)")->required();
  }
  input(leaf_cmd(qha, "reciprocity", "Ext orthogonality and reciprocity", cmd_reciprocity));
  for (auto [name, help, fn] : {std::tuple{"parity", "parity conditions", &cmd_parity},
                                std::tuple{"klpoly", "category KL polynomials", &cmd_klpoly},
                                std::tuple{"dual", "homological dual", &cmd_dual}}) {
    auto* c = leaf_cmd(qha, name, help, fn);
    input(c);
    lengths(c);
  }
  {
    auto* c = leaf_cmd(qha, "pipeline", "hypotheses and conclusions for a subalgebra", cmd_pipeline);
    input(c);
    gens(c);
    lengths(c);
    c->add_option("--keep", o.keep, "weight of the truncation (repeatable)");
  }

  CLI::App* alc = app.add_subcommand("alcove", "alcove geometry");
  alc->require_subcommand(1);
  {
    auto* c = leaf_cmd(alc, "roots", "root datum", cmd_roots);
    c->add_option("--type", o.type, "Cartan type")->capture_default_str();
    c->add_option("--rank", o.rank, "rank")->capture_default_str()->check(CLI::Range(1, 16));
  }
  {
    auto* c = leaf_cmd(alc, "linkage", "linkage data of a weight", cmd_linkage);
    lie(c);
    c->add_option("--lambda", o.lambda, "weight, comma separated")->required();
  }
  {
    auto* c = leaf_cmd(alc, "fatten", "fattening of a weight ideal", cmd_fatten);
    lie(c);
    weight_sets(c);
    c->add_option("--n", o.n, "rounds")->capture_default_str();
    c->add_flag("--regular", o.regular, "stay inside the e-regular weights");
  }
  {
    auto* c = leaf_cmd(alc, "bounds", "growth and global dimension bounds", cmd_bounds);
    lie(c, "--p");
    weight_sets(c);
    c->add_option("--m-max", o.m_max, "highest fattening level")->capture_default_str();
    c->add_option("--gldim", o.gldim, "known global dimension to compare against");
    c->add_flag("--regular", o.regular, "stay inside the p-regular weights");
  }
  {
    auto* c = leaf_cmd(alc, "partition", "GL_n weight of a partition", cmd_partition);
    c->add_option("--n", o.n, "n")->required();
    c->add_option("--partition", o.partition, "parts, comma separated")->required();
    c->add_option("--e", o.e, "level e")->capture_default_str();
  }

  CLI::App* kl = app.add_subcommand("kl", "affine Kazhdan-Lusztig combinatorics");
  kl->require_subcommand(1);
  {
    auto* c = leaf_cmd(kl, "table", "P and Q tables up to a length", cmd_table);
    lie(c);
    c->add_option("--max-length", o.max_length, "length bound")->capture_default_str();
    c->add_option("--which", o.which, "P, Q or both")->capture_default_str();
    c->add_flag("--no-cache", o.no_cache, "bypass the table cache");
  }
  {
    auto* c = leaf_cmd(kl, "inverse", "P, Q and the inversion sum for one pair", cmd_inverse);
    lie(c);
    c->add_option("--x", o.x, "reduced word over 0..rank, 'e' for 1")->required();
    c->add_option("--w", o.w, "reduced word over 0..rank, 'e' for 1")->required();
  }
  {
    auto* c = leaf_cmd(kl, "weightpoly", "P and Q between two weights", cmd_weightpoly);
    lie(c);
    c->add_option("--nu", o.nu, "weight")->required();
    c->add_option("--lambda", o.lambda, "weight")->required();
  }
  auto predict_opts = [&](CLI::App* c) {
    lie(c);
    c->add_option("--lambda", o.lambda, "dominant weight")->required();
    weight_sets(c);
  };
  predict_opts(leaf_cmd(kl, "predict", "predicted radical layers of Delta(lambda)",
                        [](const Opts& op) { return cmd_predict(op, "kl predict"); }));
  {
    auto* c = leaf_cmd(kl, "lcf", "character of L(lambda)", cmd_lcf);
    lie(c);
    c->add_option("--lambda", o.lambda, "dominant regular weight")->required();
    c->add_option("--region", o.region, "demand lambda in a region: jantzen");
  }

  CLI::App* pred = app.add_subcommand("predict", "alias group for predictions");
  pred->require_subcommand(1);
  predict_opts(leaf_cmd(pred, "layers", "predicted radical layers of Delta(lambda)",
                        [](const Opts& op) { return cmd_predict(op, "predict layers"); }));

  bool selftest = false;
  app.add_subcommand("selftest", "quick end-to-end checks")->callback([&] { selftest = true; });

  for (CLI::App* g : {alg, mod, qha, alc, kl, pred})
    for (CLI::App* c : g->get_subcommands([](CLI::App*) { return true; })) c->add_option("--output,-o", o.output, "write the report here");

  std::vector<std::string> argv_store{"grkoszul"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "grkoszul: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::input);
  }

  try {
    Report r = selftest ? cmd_selftest(err) : action();
    if (leaf) echo_params(r, leaf);
    const std::string text = r.str();
    if (!o.output.empty()) {
      std::ofstream f(o.output, std::ios::binary);
      if (!f) throw InputError("cannot write " + o.output);
      f << text;
    } else {
      out << text;
    }
    return 0;
  } catch (const Error& e) {
    err << "grkoszul: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    err << "grkoszul: internal error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::invariant);
  }
}

}  // namespace grk
