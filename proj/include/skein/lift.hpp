// Skein lifts of leaf-space diagrams to a double cover: direct lifts, detours
// and exchanges with turning, exchange and framing weights, evaluated in the
// trivial cover (HOMFLYPT per sheet, or annulus via the Hecke oracle) and in
// the gl(1) torus target.
#pragma once

#include "skein/annulus.hpp"
#include "skein/qtorus.hpp"
#include "skein/report.hpp"

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace skein {

enum class ChartKind { Planar, Annular, Torus };

struct Wall {
  int id = 0;
  int from = 1, to = 2;       // a strand on sheet `from` may detour to sheet `to`
  LatticeVector cls;          // homology added on sheet `to` by the detour
  int turn_halves = 0;        // detour weight (a1 a2)^(turn_halves/2)
};

struct CoverChart {
  ChartKind kind = ChartKind::Planar;
  std::map<int, Wall> walls;
};
CoverChart parse_chart(const std::string& text);
CoverChart load_chart(const std::string& path);

// Morse slices, read bottom to top. Positions are 0-based.
enum class SliceType { Cup, Cap, Cross, Twist, Sign, Cut, WallX, Shift, Id };
struct Slice {
  SliceType type = SliceType::Id;
  int k = 0;
  // cup: +1 for '>' (left end runs down into the cup), -1 for '<'
  // cross: 0 if the strand entering at k (bottom left) is over, 1 if the one at k+1
  // twist: +1/-1 half-twist; sign: sheet; wall: wall id; shift: +1/-1
  int arg = 0;
};

struct LeafDiagram {
  std::vector<int> bottom;  // +1 up, -1 down, for strands entering at the bottom
  std::vector<Slice> slices;
  bool periodic = false;    // top glued to bottom (torus charts)
  BraidWord braid;          // annular charts
  bool is_braid = false;
};
LeafDiagram parse_diagram(const std::string& text);
LeafDiagram load_diagram(const std::string& path);
std::string format_diagram(const LeafDiagram& d);

// --- lifts

struct LiftedPiece {
  bool closed = true;
  int sheet = 0;                  // 1 or 2, 0 if the piece changes sheet
  std::array<int, 3> rot8{0, 0, 0};  // turning in eighths of a turn on sheets 1, 2
  std::array<LatticeVector, 3> cls;  // homology on sheets 1, 2
  std::vector<std::pair<int, bool>> visits;  // same-sheet crossings (id, over)
};

struct LiftTerm {
  Scalar weight;
  std::vector<LiftedPiece> pieces;
  std::map<int, int> crossing_sign;        // kept crossings
  std::map<int, int> crossing_sheet;       // kept crossing -> sheet
  std::vector<int> exchanges;              // crossing ids
  std::string describe() const;
};

using LiftSum = std::vector<LiftTerm>;

// throws std::invalid_argument on inconsistent or unsupported input
LiftSum enumerate_lifts(const LeafDiagram& d, const CoverChart& c);
int crossing_count(const LeafDiagram& d);

// trivial cover, planar chart: open-strand sheet (0 when closed) -> scalar in a1, a2, z
using PlanarValue = std::map<int, Scalar>;
PlanarValue evaluate_trivial_cover(const LiftSum& L);
// framed HOMFLYPT of the source diagram in Sk(R^3) with framing variable A
// (value times the straight strand for a (1,1) tangle)
Scalar homflypt(const LeafDiagram& d, const Scalar& A);

// gl(1) torus target: (class on sheet 1, class on sheet 2) -> coefficient of
// e_c1 (x) e_c2, with e_(i,j) = q^(-ij/2) y^i x^j
using HomologicalValue = std::map<std::pair<LatticeVector, LatticeVector>, QField>;
HomologicalValue evaluate_homological(const LiftSum& L);
std::string homological_str(const HomologicalValue& v);

// annular chart: braid closures in the thickened annulus
struct BraidLift {
  Scalar weight;
  BraidWord sheet1, sheet2;
};
std::vector<BraidLift> lift_braid(const BraidWord& b);
Tensor2 evaluate_braid_lift(const std::vector<BraidLift>& L, int N);
VerificationReport verify_coproduct_on_braid(const BraidWord& b);
// every braid up to the given size, then random braids on 2-5 strands of length 1-8
VerificationReport verify_coproduct_braids(int strands, int length, int random, unsigned seed);

// the A_ij coproduct formula and primitivity of P_n
Tensor2 aij_coproduct_formula(int i, int j);
VerificationReport verify_aij_coproduct(int max_sum);
VerificationReport verify_pn_primitive(int max_n);
VerificationReport verify_colored_unknot(int max_size);

// diagram constructors
LeafDiagram unknot_diagram();
LeafDiagram positive_kink_diagram();
LeafDiagram random_planar_diagram(std::mt19937& rng, int max_crossings);
// the three diagrams of a skein triple at slice index `at` (a crossing):
// K+, K-, K0
std::array<LeafDiagram, 3> skein_triple(const LeafDiagram& d, size_t at);
VerificationReport verify_skein_relation(int samples, std::mt19937& rng);

// moves on random diagrams; planar (HOMFLYPT) and torus (gl1) targets
VerificationReport move_invariance_suite(unsigned seed, int samples = 20);

}  // namespace skein
