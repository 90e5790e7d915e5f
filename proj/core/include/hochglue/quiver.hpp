#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hochglue {

struct VertexId {
  std::uint32_t value = 0;
  auto operator<=>(const VertexId&) const = default;
};

struct ArrowId {
  std::uint32_t value = 0;
  auto operator<=>(const ArrowId&) const = default;
};

struct Arrow {
  std::string name;
  VertexId source;
  VertexId target;
  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  VertexId add_vertex(std::string name);
  ArrowId add_arrow(std::string name, VertexId source, VertexId target);

  [[nodiscard]] std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  [[nodiscard]] std::size_t arrow_count() const noexcept { return arrows_.size(); }
  [[nodiscard]] const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v.value); }
  [[nodiscard]] const Arrow& arrow(ArrowId a) const { return arrows_.at(a.value); }
  [[nodiscard]] VertexId source(ArrowId a) const { return arrow(a).source; }
  [[nodiscard]] VertexId target(ArrowId a) const { return arrow(a).target; }
  [[nodiscard]] std::optional<VertexId> find_vertex(const std::string& name) const;
  [[nodiscard]] std::optional<ArrowId> find_arrow(const std::string& name) const;

  [[nodiscard]] std::vector<VertexId> vertices() const;
  [[nodiscard]] std::vector<ArrowId> arrows() const;
  //! Arrows starting (resp. ending) at v, in id order.
  [[nodiscard]] std::vector<ArrowId> out_arrows(VertexId v) const;
  [[nodiscard]] std::vector<ArrowId> in_arrows(VertexId v) const;
  [[nodiscard]] bool is_loop(ArrowId a) const { return source(a) == target(a); }

  bool operator==(const Quiver&) const = default;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Arrow> arrows_;
};

//! A path stored in traversal order: arrows().front() is traversed first.
class Path {
 public:
  static Path trivial(VertexId v);
  static Path of_arrow(const Quiver& q, ArrowId a);
  //! Throws CompositionError when consecutive arrows do not compose.
  static Path of_arrows(const Quiver& q, std::vector<ArrowId> arrows);

  [[nodiscard]] VertexId source() const noexcept { return source_; }
  [[nodiscard]] VertexId target() const noexcept { return target_; }
  [[nodiscard]] std::size_t length() const noexcept { return arrows_.size(); }
  [[nodiscard]] bool is_trivial() const noexcept { return arrows_.empty(); }
  [[nodiscard]] const std::vector<ArrowId>& arrows() const noexcept { return arrows_; }

  //! Contiguous subpath of `len` arrows starting at position `pos`.
  [[nodiscard]] Path subpath(const Quiver& q, std::size_t pos, std::size_t len) const;
  //! True if the nontrivial path `other` occurs as a contiguous subpath.
  [[nodiscard]] bool contains(const Path& other) const;

  //! Canonical order: length, then arrow ids lexicographically, then base vertex.
  std::strong_ordering operator<=>(const Path& other) const;
  bool operator==(const Path& other) const = default;

  friend Path compose(const Path& later, const Path& earlier);

 private:
  Path(VertexId s, VertexId t, std::vector<ArrowId> arrows)
      : source_(s), target_(t), arrows_(std::move(arrows)) {}

  VertexId source_;
  VertexId target_;
  std::vector<ArrowId> arrows_;
};

//! The product later·earlier: earlier is traversed first.
Path compose(const Path& later, const Path& earlier);
[[nodiscard]] bool parallel(const Path& p, const Path& q);

//! Right-to-left display, e.g. "eta alpha" for alpha followed by eta.
std::string display(const Quiver& q, const Path& p);
//! Traversal-order display, as used by relation lines in algebra files.
std::string traversal(const Quiver& q, const Path& p);

struct WalkStep {
  ArrowId arrow;
  bool forward = true;
  bool operator==(const WalkStep&) const = default;
};

class Walk {
 public:
  static Walk trivial(VertexId v);

  [[nodiscard]] VertexId start() const noexcept { return start_; }
  [[nodiscard]] VertexId end() const noexcept { return end_; }
  [[nodiscard]] const std::vector<WalkStep>& steps() const noexcept { return steps_; }

  //! Appends a step; throws CompositionError if it does not leave end().
  Walk& then(const Quiver& q, WalkStep step);
  [[nodiscard]] Walk followed_by(const Quiver& q, const Walk& next) const;
  [[nodiscard]] Walk inverse() const;
  [[nodiscard]] Walk reduced() const;
  //! Forward occurrences of `a` minus inverse occurrences.
  [[nodiscard]] long signed_count(ArrowId a) const;

  bool operator==(const Walk&) const = default;

 private:
  VertexId start_;
  VertexId end_;
  std::vector<WalkStep> steps_;
};

struct Components {
  std::vector<std::size_t> component_of;  // indexed by vertex id
  std::size_t count = 0;
};

//! Components of the underlying graph, numbered by their lowest vertex id.
Components connected_components(const Quiver& q);
std::size_t betti(const Quiver& q);

[[nodiscard]] bool is_source_arrow(const Quiver& q, ArrowId a);
[[nodiscard]] bool is_sink_arrow(const Quiver& q, ArrowId a);
std::optional<std::size_t> crown_order(const Quiver& q);

}  // namespace hochglue
