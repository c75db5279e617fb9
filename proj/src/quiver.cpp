#include "grkoszul/quiver.hpp"

#include <set>

#include "grkoszul/errors.hpp"

namespace grk {

int QuiverPresentation::vertex_index(const std::string& label) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].label == label) return static_cast<int>(i);
  return -1;
}

int QuiverPresentation::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return -1;
}

int QuiverPresentation::path_src(const std::vector<int>& path) const { return arrows.at(path.front()).src; }
int QuiverPresentation::path_tgt(const std::vector<int>& path) const { return arrows.at(path.back()).tgt; }

bool QuiverPresentation::operator==(const QuiverPresentation& o) const {
  return field == o.field && vertices == o.vertices && arrows == o.arrows && relations == o.relations &&
         order == o.order && duality == o.duality && max_length == o.max_length;
}

void validate(const QuiverPresentation& q) {
  std::set<std::string> seen;
  for (const auto& v : q.vertices)
    if (!seen.insert(v.label).second) throw InputError("duplicate vertex '" + v.label + "'");
  seen.clear();
  for (const auto& a : q.arrows) {
    if (!seen.insert(a.name).second) throw InputError("duplicate arrow '" + a.name + "'");
    if (a.src < 0 || a.tgt < 0 || a.src >= (int)q.vertices.size() || a.tgt >= (int)q.vertices.size())
      throw InputError("arrow '" + a.name + "' has an unknown endpoint");
  }
  for (std::size_t r = 0; r < q.relations.size(); ++r) {
    const auto& rel = q.relations[r];
    if (rel.empty()) throw InputError("relation " + std::to_string(r + 1) + " is empty");
    int s = -1, t = -1;
    for (const auto& term : rel) {
      if (term.arrows.empty())
        throw InputError("relation " + std::to_string(r + 1) + " has a term outside the arrow ideal");
      for (std::size_t k = 0; k + 1 < term.arrows.size(); ++k)
        if (q.arrows.at(term.arrows[k]).tgt != q.arrows.at(term.arrows[k + 1]).src)
          throw InputError("relation " + std::to_string(r + 1) + " contains a non-composable path");
      int ts = q.path_src(term.arrows), tt = q.path_tgt(term.arrows);
      if (s == -1) {
        s = ts;
        t = tt;
      } else if (s != ts || t != tt) {
        throw InputError("relation " + std::to_string(r + 1) + " mixes paths with different endpoints");
      }
    }
  }
  for (const auto& [a, b] : q.order)
    if (a < 0 || b < 0 || a >= (int)q.vertices.size() || b >= (int)q.vertices.size())
      throw InputError("order refers to an unknown vertex");
  if (!q.duality.empty()) {
    if (q.duality.size() != q.arrows.size()) throw InputError("duality must give an image for every arrow");
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
      const auto& img = q.arrows.at(q.duality[i].arrow);
      if (img.src != q.arrows[i].tgt || img.tgt != q.arrows[i].src)
        throw InputError("duality image of '" + q.arrows[i].name + "' must reverse it");
    }
  }
}

}  // namespace grk
