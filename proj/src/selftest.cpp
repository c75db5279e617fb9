#include "grkoszul/selftest.hpp"

#include <chrono>
#include <functional>

#include "grkoszul/alcove.hpp"
#include "grkoszul/coxeter.hpp"
#include "grkoszul/errors.hpp"
#include "grkoszul/formats.hpp"
#include "grkoszul/koszul.hpp"
#include "grkoszul/models.hpp"
#include "grkoszul/qha.hpp"
#include "grkoszul/weightpoly.hpp"

namespace grk {

bool SelftestResult::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

namespace {

HighestWeight hw(const QuiverPresentation& q) {
  auto a = build_algebra(q);
  return standard_modules(a, poset_of(*a), duality_of(*a));
}

bool orthogonal(const QuiverPresentation& q) { return orthogonality_reciprocity_check(hw(q)).orthogonal; }

bool table_ok(char type, int rank, long e, int len) {
  CoxeterTable ct(root_datum(type, rank), e, len);
  auto kl = kl_tables(ct);
  return kl.inversion_ok && kl.parity_ok && kl.degree_ok;
}

}  // namespace

SelftestResult run_selftest() {
  const auto t0 = std::chrono::steady_clock::now();
  SelftestResult out;
  auto run = [&](const std::string& name, const std::function<bool()>& fn) {
    SelftestCheck c{name, false, ""};
    try {
      c.pass = fn();
      if (!c.pass) c.detail = "check returned false";
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    out.checks.push_back(c);
  };

  run("b5.qha", [] {
    auto r = qha_check(hw(models::b5()));
    return r.qha && r.gldim == std::size_t{2};
  });
  run("b5.koszul", [] {
    auto k = koszul_check(build_algebra(models::b5()), 8);
    return k.koszul && k.exact && k.gldim == std::size_t{2};
  });
  run("b5.parity", [] {
    auto h = hw(models::b5());
    auto p = parity_checks(h, {0, 1});
    return p.kl && p.skl && !parity_checks(h, {0, 0}).kl;
  });
  run("dual.koszul", [] {
    auto k = koszul_check(build_algebra(models::dual_numbers()), 8);
    return k.koszul && k.exact;
  });
  run("cubic.not_koszul", [] {
    auto k = koszul_check(build_algebra(models::truncated_cubic()), 8);
    return !k.koszul && k.exact && k.witness.find("degree-2 syzygy head in grade 3") != std::string::npos;
  });
  run("b5.orthogonality", [] { return orthogonal(models::b5()); });
  run("b9.orthogonality", [] { return orthogonal(models::b9()); });
  run("qalg.roundtrip", [] {
    for (const auto& name : models::names()) {
      auto q = models::by_name(name);
      if (parse_qalg(write_qalg(q)) != q) return false;
    }
    return true;
  });
  run("kl.a1", [] { return table_ok('A', 1, 5, 8); });
  run("kl.a2", [] { return table_ok('A', 2, 5, 4); });
  run("kl.b2", [] { return table_ok('B', 2, 7, 4); });
  run("predict.a1", [] {
    auto p = predict_layers(root_datum('A', 1), 5, {5});
    auto l = p.layers();
    return l.size() == 2 && l[1].size() == 1 && l[1][0].first == Weight{3} && l[1][0].second == 1;
  });
  run("lcf.a1", [] { return lcf_character(root_datum('A', 1), 5, {5}).dim == 2; });
  run("linkage.a1", [] {
    auto rd = root_datum('A', 1);
    auto a = linkage(rd, 5, {5}), b = linkage(rd, 5, {3});
    return a.minus == b.minus && a.length == 2 && b.length == 1 && linkage(rd, 5, {4}).singular;
  });
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace grk
