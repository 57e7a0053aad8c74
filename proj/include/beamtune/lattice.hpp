#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace beamtune {

enum class ElementKind { Drift, Quad, Sbend, Aperture, Watch, Cavity, Marker };

std::string_view kind_name(ElementKind kind);

inline bool is_tunable(ElementKind kind) {
  return kind == ElementKind::Quad || kind == ElementKind::Sbend;
}

// One beamline component. Kind-specific parameters are engaged only for the
// kinds they apply to; `make_*` below are the only intended constructors.
struct Element {
  std::string name;
  ElementKind kind = ElementKind::Marker;
  double length = 0.0;  // m

  std::optional<double> k1;     // m^-2, QUAD
  std::optional<double> hkick;  // rad, QUAD
  std::optional<double> vkick;  // rad, QUAD
  std::optional<double> angle;  // rad, SBEND
  std::optional<double> fse;    // SBEND
  std::optional<double> ax;     // m, APERTURE
  std::optional<double> ay;     // m, APERTURE

  bool tunable() const { return is_tunable(kind); }

  friend bool operator==(const Element&, const Element&) = default;
};

Element make_drift(std::string name, double length);
Element make_quad(std::string name, double length, double k1, double hkick = 0.0, double vkick = 0.0);
Element make_sbend(std::string name, double length, double angle, double fse = 0.0);
Element make_aperture(std::string name, double ax, double ay);
Element make_watch(std::string name);
Element make_cavity(std::string name, double length);
Element make_marker(std::string name);

// Flattened beamline. Positions are 0-based indices into `elements()`.
class BeamlineGraph {
 public:
  BeamlineGraph() = default;
  BeamlineGraph(std::string line_name, std::vector<Element> elements);

  const std::string& line_name() const { return line_name_; }
  const std::vector<Element>& elements() const { return elements_; }
  const Element& at(std::size_t pos) const { return elements_.at(pos); }
  std::size_t size() const { return elements_.size(); }

  // Mutable access for tuning. Changing an element's kind is not allowed
  // because the index tables would go stale.
  Element& mutable_at(std::size_t pos) { return elements_.at(pos); }

  const std::vector<std::size_t>& tunable_index() const { return tunable_index_; }
  const std::vector<std::size_t>& watch_index() const { return watch_index_; }

  double total_length() const;
  std::size_t quad_count() const;
  std::size_t sbend_count() const;
  // 3 per quadrupole (K1, HKICK, VKICK) + 1 per dipole (FSE).
  std::size_t parameter_dimension() const { return 3 * quad_count() + sbend_count(); }

  // Position of the first tunable element after `watch_pos`.
  // Throws NoDownstreamTunable when none exists.
  std::size_t next_tunable(std::size_t watch_pos) const;
  // Position of the first WATCH after `element_pos`. Throws std::out_of_range
  // when none exists, which cannot happen on a preprocessed graph.
  std::size_t next_watch(std::size_t element_pos) const;

  friend bool operator==(const BeamlineGraph& a, const BeamlineGraph& b) {
    return a.line_name_ == b.line_name_ && a.elements_ == b.elements_;
  }

 private:
  void rebuild_index();

  std::string line_name_;
  std::vector<Element> elements_;
  std::vector<std::size_t> tunable_index_;
  std::vector<std::size_t> watch_index_;
};

class LatticeError : public std::runtime_error {
 public:
  LatticeError(const std::string& what, int line) : std::runtime_error(format(what, line)), line_(line) {}
  // 0 when the error is not tied to a source line.
  int line() const { return line_; }

 private:
  static std::string format(const std::string& what, int line);
  int line_;
};

class NoDownstreamTunable : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Parses the supported lattice subset:
//
//   ! comment                       (also after a statement)
//   NAME: TYPE, KEY=value, ...      element definition
//   NAME: LINE=(a, b, c)            beamline, nesting by reference
//   USE, NAME                       optional top-level selection
//
// Statements end at a newline unless the line ends with '&'. Keywords and
// names are case-insensitive and stored upper-case. Without USE the last LINE
// defined is the top level. Repetition (2*SEG) and reversal (-SEG) are
// rejected.
//
// Types: DRIFT/DRIF (L), QUAD/QUADRUPOLE/KQUAD (L, K1, HKICK, VKICK),
// SBEND/SBEN/CSBEND (L, ANGLE, FSE), MAXAMP/APERTURE (AX, AY),
// WATCH, MARKER/MARK, RFCA/CAVITY (L).
BeamlineGraph parse_lattice(std::string_view source);
BeamlineGraph load_lattice(const std::string& path);

// Inserts a WATCH in front of every tunable element not already directly
// preceded by one and appends a terminal WATCH. Idempotent.
BeamlineGraph preprocess(const BeamlineGraph& graph);

// Emits canonical text that parses back to an identical graph. Instances that
// share a name but differ in parameters get "_<n>" suffixes.
std::string write_lattice(const BeamlineGraph& graph);

}  // namespace beamtune
