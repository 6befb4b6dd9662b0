#include "quiverlab/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace quiverlab {

namespace {

void check_name(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("empty name");
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '.' || c == ':' ||
        c == '#') {
      throw std::invalid_argument("name contains a reserved character: " +
                                  std::string(name));
    }
  }
}

}  // namespace

int Quiver::add_vertex(std::string name) {
  check_name(name);
  if (vertex_by_name_.count(name)) {
    throw std::invalid_argument("duplicate vertex name: " + name);
  }
  int id = vertex_count();
  vertex_by_name_.emplace(name, id);
  vertex_names_.push_back(std::move(name));
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

int Quiver::add_arrow(std::string name, int source, int target) {
  check_name(name);
  if (arrow_by_name_.count(name)) {
    throw std::invalid_argument("duplicate arrow name: " + name);
  }
  if (source < 0 || source >= vertex_count() || target < 0 ||
      target >= vertex_count()) {
    throw std::invalid_argument("arrow endpoint out of range: " + name);
  }
  int id = arrow_count();
  arrow_by_name_.emplace(name, id);
  arrows_.push_back(Arrow{std::move(name), source, target});
  out_[source].push_back(id);
  in_[target].push_back(id);
  return id;
}

int Quiver::add_arrow(std::string name, std::string_view source,
                      std::string_view target) {
  return add_arrow(std::move(name), require_vertex(source),
                   require_vertex(target));
}

std::optional<int> Quiver::vertex_id(std::string_view name) const {
  auto it = vertex_by_name_.find(std::string(name));
  if (it == vertex_by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Quiver::arrow_id(std::string_view name) const {
  auto it = arrow_by_name_.find(std::string(name));
  if (it == arrow_by_name_.end()) return std::nullopt;
  return it->second;
}

int Quiver::require_vertex(std::string_view name) const {
  auto id = vertex_id(name);
  if (!id) throw std::invalid_argument("unknown vertex: " + std::string(name));
  return *id;
}

int Quiver::require_arrow(std::string_view name) const {
  auto id = arrow_id(name);
  if (!id) throw std::invalid_argument("unknown arrow: " + std::string(name));
  return *id;
}

Path Path::then(const Path& next) const {
  if (target != next.source) {
    throw std::invalid_argument("paths do not compose");
  }
  Path out{source, next.target, arrows};
  out.arrows.insert(out.arrows.end(), next.arrows.begin(), next.arrows.end());
  return out;
}

Path arrow_path(const Quiver& q, int arrow) {
  const Arrow& a = q.arrow(arrow);
  return Path{a.source, a.target, {arrow}};
}

Path make_path(const Quiver& q, const std::vector<std::string>& arrow_names) {
  if (arrow_names.empty()) {
    throw std::invalid_argument("make_path needs at least one arrow");
  }
  Path p = arrow_path(q, q.require_arrow(arrow_names.front()));
  for (std::size_t i = 1; i < arrow_names.size(); ++i) {
    p = p.then(arrow_path(q, q.require_arrow(arrow_names[i])));
  }
  return p;
}

bool is_valid_path(const Quiver& q, const Path& p) {
  if (p.source < 0 || p.source >= q.vertex_count()) return false;
  if (p.target < 0 || p.target >= q.vertex_count()) return false;
  int at = p.source;
  for (int a : p.arrows) {
    if (a < 0 || a >= q.arrow_count()) return false;
    if (q.arrow(a).source != at) return false;
    at = q.arrow(a).target;
  }
  return at == p.target;
}

bool canonical_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.source != b.source) return a.source < b.source;
  if (a.target != b.target) return a.target < b.target;
  return a.arrows < b.arrows;
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e_" + q.vertex_name(p.source);
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += '.';
    out += q.arrow(p.arrows[i]).name;
  }
  return out;
}

std::vector<Path> enumerate_paths(const Quiver& q, int source, int length) {
  std::vector<Path> out;
  Path current = Path::trivial(source);
  auto extend = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int a : q.arrows_from(current.target)) {
      current.arrows.push_back(a);
      int saved = current.target;
      current.target = q.arrow(a).target;
      self(self, remaining - 1);
      current.target = saved;
      current.arrows.pop_back();
    }
  };
  extend(extend, length);
  return out;
}

std::vector<Path> enumerate_paths_between(const Quiver& q, int source,
                                          int target, int length) {
  std::vector<Path> out;
  for (Path& p : enumerate_paths(q, source, length)) {
    if (p.target == target) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace quiverlab
