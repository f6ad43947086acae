// Diagram parsing, face traversal and compilation to shadows.

#include <functional>
#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "shadowq/error.hpp"
#include "shadowq/skein.hpp"
#include "shadowq/statesum.hpp"

using namespace shadowq;

namespace {

const char* kLinks[] = {"unknot", "kink_pos", "kink_neg", "unlink2", "hopf", "trefoil", "figure8"};

BracketResult compiled_bracket(const Diagram& d) {
  const Shadow s = compile(d).shadow;
  return bracket(s, s.max_fixed_color() + 16);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Domain;
}

nlohmann::json diagram_json(const std::string& name) {
  return nlohmann::json::parse(read_text(std::string(SHADOWQ_DATA_DIR) + "/diagrams/" + name + ".json"));
}

}  // namespace

TEST_CASE("parse_diagram and compute_faces examples") {
  const Diagram u = load_diagram("unknot");
  CHECK(g_edges(u).size() == 1);
  CHECK(compute_faces(u).faces.size() == 2);

  const Diagram h = load_diagram("hopf");
  CHECK(g_edges(h).size() == 2);
  CHECK(compute_faces(h).faces.size() == 4);

  const Diagram t = load_diagram("trefoil");
  CHECK(g_edges(t).size() == 1);
  CHECK(compute_faces(t).faces.size() == 5);

  CHECK(compute_faces(load_diagram("figure8")).faces.size() == 6);
  CHECK(compute_faces(load_diagram("tetrahedron")).faces.size() == 4);
}

TEST_CASE("parse_diagram rejects malformed input") {
  auto j = diagram_json("trefoil");
  j["crossings"][0]["ends"][1] = j["crossings"][0]["ends"][0];
  CHECK(kind_of([&] { diagram_from_json(j); }) == ErrorKind::Parse);

  j = diagram_json("trefoil");
  j["arcs"].push_back("loose");
  j["crossings"][0]["ends"][0]["arc"] = "loose";
  CHECK(kind_of([&] { diagram_from_json(j); }) == ErrorKind::Parse);

  // Swapping two adjacent ends keeps every end used but breaks planarity.
  j = diagram_json("trefoil");
  std::swap(j["crossings"][0]["ends"][0], j["crossings"][0]["ends"][1]);
  try {
    diagram_from_json(j);
    FAIL("nonplanar diagram accepted");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("nonplanar") != std::string::npos);
  }

  j = diagram_json("hopf");
  j["knot"] = true;
  CHECK(kind_of([&] { diagram_from_json(j); }) == ErrorKind::Parse);

  j = diagram_json("unknot");
  j["holes"] = {j["outer_face"]};
  CHECK(kind_of([&] { diagram_from_json(j); }) == ErrorKind::Parse);

  j = diagram_json("hopf");
  j["colors"] = {{"p1", 1}, {"p2", 3}};
  CHECK(kind_of([&] { diagram_from_json(j); }) == ErrorKind::Parse);

  CHECK(kind_of([] { parse_diagram("{\"arcs\": [1, 2"); }) == ErrorKind::Parse);
}

TEST_CASE("diagram JSON round trip") {
  for (const char* name : kLinks) {
    const Diagram d = load_diagram(name);
    CHECK(diagram_to_json(diagram_from_json(diagram_to_json(d))) == diagram_to_json(d));
  }
}

TEST_CASE("compile examples") {
  const auto u = compiled_bracket(load_diagram("unknot"));
  CHECK(u.value == QRat(-quantum_int(2)));

  const QRat flat = compiled_bracket(load_diagram("unknot")).value;
  const QRat pos = compiled_bracket(load_diagram("kink_pos")).value;
  const QRat neg = compiled_bracket(load_diagram("kink_neg")).value;
  // -A^3 and -A^-3 with A = x^2.
  CHECK(pos == flat * QRat(QPoly::monomial(-1, 6)));
  CHECK(neg == flat * QRat(QPoly::monomial(-1, -6)));

  const Diagram hopf = load_diagram("hopf");
  CHECK(compiled_bracket(hopf).value == QRat(kauffman_bracket(hopf)));
}

TEST_CASE("compiled shadows match the skein oracle") {
  for (const char* name : kLinks) {
    CAPTURE(name);
    const Diagram d = load_diagram(name);
    const auto c = compile(d);
    CHECK(validate_shadow(c.shadow).ok());
    const auto b = compiled_bracket(d);
    CHECK(b.complete);
    CHECK(b.value == QRat(kauffman_bracket(d)));
  }
}

TEST_CASE("every usable outer face gives the same bracket") {
  for (const char* name : kLinks) {
    CAPTURE(name);
    Diagram d = load_diagram(name);
    const QRat want(kauffman_bracket(d));
    const FaceSet fs = compute_faces(d);
    int compiled = 0;
    for (const auto& face : fs.faces) {
      d.outer_face = face.front();
      try {
        const QRat got = compiled_bracket(d).value;
        CHECK(got == want);
        ++compiled;
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Compile);
        CHECK(std::string(e.what()).find("isotope") != std::string::npos);
      }
    }
    CHECK(compiled >= 1);
  }
}

TEST_CASE("kinks change the bracket by a monomial and keep the order") {
  const QRat flat = compiled_bracket(load_diagram("unknot")).value;
  for (const char* name : {"kink_pos", "kink_neg"}) {
    const QRat k = compiled_bracket(load_diagram(name)).value;
    const QRat ratio = (k / flat).reduced();
    CHECK(ratio.den().is_one());
    CHECK(ratio.num().is_monomial());
    CHECK(k.ord_at_i() == flat.ord_at_i());
  }
}

TEST_CASE("gleam bookkeeping") {
  for (const char* name : kLinks) {
    CAPTURE(name);
    const auto c = compile(load_diagram(name));
    for (const auto& [x, sum] : c.report.crossing_gleam2_sum) CHECK(sum == 0);
    std::int64_t from_regions = 0, from_ledger = 0;
    for (const auto& r : c.shadow.regions) from_regions += r.gleam2;
    for (const auto& [face, entries] : c.report.gleam_ledger) {
      for (const auto& e : entries) {
        if (e.ends_with(":+1/2")) ++from_ledger;
        if (e.ends_with(":-1/2")) --from_ledger;
      }
    }
    CHECK(from_regions == from_ledger);
  }
}

TEST_CASE("crossings meeting the outer face twice are rejected") {
  Diagram d = load_diagram("kink_pos");
  // The face with two corners at the crossing.
  d.outer_face = FaceKey{"a", Side::Right};
  try {
    compile(d);
    FAIL("compiled");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Compile);
    CHECK(std::string(e.what()).find("'X'") != std::string::npos);
  }
}

TEST_CASE("disconnected diagrams do not compile") {
  Diagram d;
  d.arcs = {"a", "b"};
  d.outer_face = FaceKey{"a", Side::Right};
  CHECK(compute_faces(d).pieces == 2);
  CHECK(kind_of([&] { compile(d); }) == ErrorKind::Compile);
}

TEST_CASE("planar theta and tetrahedron compile to their atomic cones") {
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> col(0, 7);
  Diagram th = load_diagram("theta");
  const auto cs = compile(th);
  CHECK(cs.shadow.regions.size() == 3);
  CHECK(cs.shadow.interior_edges.size() == 1);
  CHECK(cs.shadow.boundary_vertices.size() == 2);
  for (int k = 0; k < 25;) {
    const int a = col(rng), b = col(rng), c = col(rng);
    if (!is_admissible({a, b, c})) continue;
    th.colors = {{"e1", a}, {"e2", b}, {"e3", c}};
    CHECK(compiled_bracket(th).value == theta_eval({a, b, c}));
    ++k;
  }

  Diagram tet = load_diagram("tetrahedron");
  const auto ct = compile(tet);
  CHECK(ct.shadow.regions.size() == 6);
  CHECK(ct.shadow.interior_edges.size() == 4);
  CHECK(ct.shadow.interior_vertices.size() == 1);
  CHECK(ct.shadow.boundary_vertices.size() == 4);
  std::uniform_int_distribution<int> small(0, 5);
  for (int k = 0; k < 25;) {
    const TetFrame fr{small(rng), small(rng), small(rng), small(rng), small(rng), small(rng)};
    if (!fr.admissible()) continue;
    tet.colors = {{"oa", fr.a}, {"ob", fr.b}, {"oc", fr.c}, {"bc", fr.d}, {"ca", fr.e}, {"ab", fr.f}};
    CHECK(compiled_bracket(tet).value == tet_eval(fr));
    ++k;
  }
}

TEST_CASE("compiled corpus satisfies the per-state order bound") {
  for (const char* name : {"unknot", "kink_pos", "kink_neg", "unlink2", "hopf", "trefoil", "figure8", "theta",
                           "tetrahedron"}) {
    CAPTURE(name);
    const Shadow s = compile(load_diagram(name)).shadow;
    for (const auto& c : enumerate_colorings(s, s.max_fixed_color() + 16).colorings) {
      CHECK(verify_state_bound(s, c).holds);
    }
  }
}
