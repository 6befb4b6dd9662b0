#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace quiverlab {

struct Arrow {
  std::string name;
  int source = -1;
  int target = -1;
};

// A finite quiver. Vertices and arrows are addressed by dense integer ids in
// insertion order; names are unique within their kind.
class Quiver {
 public:
  int add_vertex(std::string name);
  int add_arrow(std::string name, int source, int target);
  int add_arrow(std::string name, std::string_view source,
                std::string_view target);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }

  const std::string& vertex_name(int v) const { return vertex_names_.at(v); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }

  std::optional<int> vertex_id(std::string_view name) const;
  std::optional<int> arrow_id(std::string_view name) const;
  int require_vertex(std::string_view name) const;
  int require_arrow(std::string_view name) const;

  const std::vector<int>& arrows_from(int v) const { return out_.at(v); }
  const std::vector<int>& arrows_into(int v) const { return in_.at(v); }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_, in_;
  std::unordered_map<std::string, int> vertex_by_name_, arrow_by_name_;
};

// A directed path, stored in traversal order: arrows[0] leaves `source`, the
// last arrow enters `target`. A trivial path has no arrows and source ==
// target.
struct Path {
  int source = -1;
  int target = -1;
  std::vector<int> arrows;

  static Path trivial(int vertex) { return Path{vertex, vertex, {}}; }
  int length() const { return static_cast<int>(arrows.size()); }
  bool is_trivial() const { return arrows.empty(); }

  // Concatenation: traverse *this, then `next`. Requires target == next.source.
  Path then(const Path& next) const;

  friend bool operator==(const Path&, const Path&) = default;
};

Path arrow_path(const Quiver& q, int arrow);

// Builds a path from arrow names in traversal order; throws on unknown names
// or non-composable steps.
Path make_path(const Quiver& q, const std::vector<std::string>& arrow_names);

bool is_valid_path(const Quiver& q, const Path& p);

// Canonical order: by length, then source, then target, then the arrow id
// sequence lexicographically.
bool canonical_less(const Path& a, const Path& b);

std::string path_to_string(const Quiver& q, const Path& p);

// All paths of exactly the given length starting at `source`.
std::vector<Path> enumerate_paths(const Quiver& q, int source, int length);

// All paths of exactly the given length from `source` to `target`, in
// canonical order.
std::vector<Path> enumerate_paths_between(const Quiver& q, int source,
                                          int target, int length);

}  // namespace quiverlab
