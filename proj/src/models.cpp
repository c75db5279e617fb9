#include "grkoszul/models.hpp"

#include "grkoszul/errors.hpp"
#include "grkoszul/formats.hpp"

namespace grk::models {

std::string b5_text() {
  return "# principal block of the first nontrivial A1 example, two weights\n"
         "field Q\n"
         "vertex 1 length=0 weight=3\n"
         "vertex 2 length=1 weight=5\n"
         "arrow alpha 1 2\n"
         "arrow beta 2 1\n"
         "relation beta*alpha\n"
         "order 1 < 2\n"
         "duality alpha:beta beta:alpha\n";
}

std::string b9_text() {
  return "# three linked weights 3 < 5 < 13\n"
         "field Q\n"
         "vertex 3 length=1 weight=3\n"
         "vertex 5 length=2 weight=5\n"
         "vertex 13 length=3 weight=13\n"
         "arrow a 3 5\n"
         "arrow b 5 3\n"
         "arrow c 5 13\n"
         "arrow d 13 5\n"
         "relation a*c\n"
         "relation d*b\n"
         "relation d*c\n"
         "relation b*a - c*d\n"
         "order 3 < 5\n"
         "order 5 < 13\n"
         "duality a:b b:a c:d d:c\n";
}

std::string dual_numbers_text() {
  return "field Q\n"
         "vertex 1 length=0\n"
         "arrow x 1 1\n"
         "relation x*x\n";
}

std::string truncated_cubic_text() {
  return "field Q\n"
         "vertex 1 length=0\n"
         "arrow x 1 1\n"
         "relation x*x*x\n";
}

std::string linear2_text() {
  return "field Q\n"
         "vertex 1 length=0\n"
         "vertex 2 length=1\n"
         "arrow a 1 2\n"
         "order 1 < 2\n";
}

std::string semisimple_text(int n) {
  std::string s = "field Q\n";
  for (int i = 1; i <= n; ++i) s += "vertex " + std::to_string(i) + " length=0\n";
  return s;
}

QuiverPresentation b5() { return parse_qalg(b5_text(), "b5"); }
QuiverPresentation b9() { return parse_qalg(b9_text(), "b9"); }
QuiverPresentation dual_numbers() { return parse_qalg(dual_numbers_text(), "dual"); }
QuiverPresentation truncated_cubic() { return parse_qalg(truncated_cubic_text(), "cubic"); }
QuiverPresentation linear2() { return parse_qalg(linear2_text(), "linear2"); }
QuiverPresentation semisimple(int n) { return parse_qalg(semisimple_text(n), "ss" + std::to_string(n)); }

QuiverPresentation by_name(const std::string& name) {
  if (name == "b5") return b5();
  if (name == "b9") return b9();
  if (name == "dual") return dual_numbers();
  if (name == "cubic") return truncated_cubic();
  if (name == "linear2") return linear2();
  if (name.rfind("ss", 0) == 0 && name.size() > 2) {
    try {
      int n = std::stoi(name.substr(2));
      if (n >= 1 && n <= 64) return semisimple(n);
    } catch (const std::exception&) {
    }
  }
  throw InputError("unknown model '" + name + "'");
}

std::vector<std::string> names() { return {"b5", "b9", "dual", "cubic", "linear2", "ss2"}; }

}  // namespace grk::models
