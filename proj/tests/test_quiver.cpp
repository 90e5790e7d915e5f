#include <doctest.h>

#include "hochglue/quiver.hpp"
#include "support.hpp"

using namespace hochglue;
using testing::example;
using testing::path_of;

TEST_CASE("compose follows the right-to-left product") {
  Quiver q = example("a4-path").quiver();
  Path alpha = path_of(q, "alpha");
  Path eta = path_of(q, "eta");
  CHECK(compose(Path::trivial(*q.find_vertex("e2")), alpha) == alpha);
  Path ea = compose(eta, alpha);
  CHECK(ea.length() == 2);
  CHECK(display(q, ea) == "eta alpha");
  CHECK(traversal(q, ea) == "alpha eta");
  CHECK_THROWS_AS((void)compose(alpha, eta), CompositionError);
}

TEST_CASE("parallel paths") {
  Quiver q = example("loop-square").quiver();
  auto e1 = Path::trivial(*q.find_vertex("e1"));
  CHECK(parallel(e1, e1));
  CHECK_FALSE(parallel(path_of(q, "alpha"), path_of(q, "beta")));
  CHECK(parallel(path_of(q, "xi"), e1));
}

TEST_CASE("components and betti numbers") {
  Quiver one;
  one.add_vertex("v");
  CHECK(connected_components(one).count == 1);
  CHECK(betti(one) == 0);
  Quiver two = example("two-blocks").quiver();
  CHECK(connected_components(two).count == 2);
  CHECK(betti(two) == 0);
  Quiver q;
  auto f1 = q.add_vertex("f1");
  auto f2 = q.add_vertex("f2");
  q.add_arrow("gamma*", f1, f2);
  q.add_arrow("eta", f2, f1);
  CHECK(betti(q) == 1);
  CHECK(crown_order(q) == 2);
}

TEST_CASE("source and sink arrows") {
  Quiver q = example("a4-path").quiver();
  auto alpha = *q.find_arrow("alpha");
  auto beta = *q.find_arrow("beta");
  auto eta = *q.find_arrow("eta");
  CHECK(is_source_arrow(q, alpha));
  CHECK(is_sink_arrow(q, beta));
  CHECK_FALSE(is_source_arrow(q, eta));
  CHECK_FALSE(is_sink_arrow(q, eta));
  Quiver r = example("rad-square-zero-pairs").quiver();
  CHECK_FALSE(is_source_arrow(r, *r.find_arrow("alpha")));
}

TEST_CASE("crowns") {
  Quiver loop;
  auto v = loop.add_vertex("v");
  loop.add_arrow("x", v, v);
  CHECK(crown_order(loop) == 1);
  CHECK_FALSE(crown_order(example("a4-path").quiver()).has_value());
  Quiver c3;
  auto a = c3.add_vertex("a");
  auto b = c3.add_vertex("b");
  auto c = c3.add_vertex("c");
  c3.add_arrow("x", a, b);
  c3.add_arrow("y", b, c);
  c3.add_arrow("z", c, a);
  CHECK(crown_order(c3) == 3);
  CHECK(betti(c3) == 1);
}

TEST_CASE("walk reduction and signed counts") {
  Quiver q = example("a4-path").quiver();
  auto alpha = *q.find_arrow("alpha");
  auto eta = *q.find_arrow("eta");
  Walk w = Walk::trivial(*q.find_vertex("e1"));
  w.then(q, {alpha, true}).then(q, {eta, true}).then(q, {eta, false}).then(q, {alpha, false});
  CHECK(w.steps().size() == 4);
  CHECK(w.reduced().steps().empty());
  CHECK(w.signed_count(alpha) == 0);
  Walk v = Walk::trivial(*q.find_vertex("e2"));
  v.then(q, {alpha, false});
  CHECK(v.end() == *q.find_vertex("e1"));
  CHECK(v.signed_count(alpha) == -1);
  CHECK(v.inverse().signed_count(alpha) == 1);
  CHECK_THROWS_AS(v.then(q, {eta, true}), CompositionError);
}

TEST_CASE("path ordering is by length then arrow ids") {
  Quiver q = example("a4-path").quiver();
  CHECK(path_of(q, "e4") < path_of(q, "alpha"));
  CHECK(path_of(q, "beta") < path_of(q, "alpha eta"));
  CHECK(path_of(q, "alpha eta") < path_of(q, "eta beta"));
  Path long_path = path_of(q, "alpha eta beta");
  CHECK(long_path.contains(path_of(q, "eta beta")));
  CHECK(long_path.contains(path_of(q, "eta")));
  CHECK_FALSE(path_of(q, "eta beta").contains(path_of(q, "alpha")));
}
