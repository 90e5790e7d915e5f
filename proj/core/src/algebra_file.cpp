#include "hochglue/algebra_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hochglue/errors.hpp"

namespace hochglue {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back(Token{std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

}  // namespace

MonomialAlgebra parse_algebra(std::string_view text, BuildOptions options) {
  Quiver q;
  std::vector<Path> relations;
  std::vector<std::size_t> relation_lines;
  Field field = Field::rationals();
  bool have_field = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    auto fail = [&](std::size_t tok, const std::string& msg) -> ParseError {
      std::size_t col = tok < toks.size() ? toks[tok].column : line.size() + 1;
      return ParseError(line_no, col, msg);
    };
    auto expect = [&](std::size_t n) {
      if (toks.size() != n) throw fail(std::min(toks.size(), n), "'" + kw + "' expects " + std::to_string(n - 1) + " argument(s)");
    };

    if (kw == "field") {
      if (have_field) throw fail(0, "duplicate field directive");
      if (toks.size() == 2 && toks[1].text == "Q") {
        field = Field::rationals();
      } else if (toks.size() == 3 && toks[1].text == "F") {
        unsigned p = 0;
        const std::string& s = toks[2].text;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), p);
        if (ec != std::errc() || ptr != s.data() + s.size()) throw fail(2, "bad characteristic '" + s + "'");
        try {
          field = Field::prime(p);
        } catch (const Error& e) {
          throw fail(2, e.what());
        }
      } else {
        throw fail(1, "expected 'field Q' or 'field F <p>'");
      }
      have_field = true;
    } else if (kw == "vertex") {
      expect(2);
      if (q.find_vertex(toks[1].text)) throw fail(1, "duplicate vertex name '" + toks[1].text + "'");
      q.add_vertex(toks[1].text);
    } else if (kw == "arrow") {
      expect(4);
      if (q.find_arrow(toks[1].text)) throw fail(1, "duplicate arrow name '" + toks[1].text + "'");
      auto s = q.find_vertex(toks[2].text);
      if (!s) throw fail(2, "unknown vertex '" + toks[2].text + "'");
      auto t = q.find_vertex(toks[3].text);
      if (!t) throw fail(3, "unknown vertex '" + toks[3].text + "'");
      q.add_arrow(toks[1].text, *s, *t);
    } else if (kw == "rel") {
      if (toks.size() < 3) throw fail(1, "relation must have length >= 2");
      std::vector<ArrowId> arrows;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        auto a = q.find_arrow(toks[i].text);
        if (!a) throw fail(i, "unknown arrow '" + toks[i].text + "'");
        if (!arrows.empty() && q.target(arrows.back()) != q.source(*a)) {
          throw fail(i, "bad relation path: '" + toks[i].text + "' does not start where '" +
                            toks[i - 1].text + "' ends");
        }
        arrows.push_back(*a);
      }
      Path r = Path::of_arrows(q, std::move(arrows));
      for (std::size_t i = 0; i < relations.size(); ++i) {
        const Path& s = relations[i];
        if (s == r) throw fail(0, "duplicate relation (first given on line " + std::to_string(relation_lines[i]) + ")");
        if (!options.drop_superset_relations && (r.contains(s) || s.contains(r))) {
          throw fail(0, "relations are not minimal: overlaps the relation on line " + std::to_string(relation_lines[i]));
        }
      }
      relations.push_back(std::move(r));
      relation_lines.push_back(line_no);
    } else {
      throw fail(0, "unknown directive '" + kw + "'");
    }
  }
  return MonomialAlgebra::build(std::move(q), std::move(relations), field, options);
}

std::string print_algebra(const MonomialAlgebra& a) {
  const Quiver& q = a.quiver();
  std::ostringstream out;
  out << "field " << (a.field().is_rational() ? std::string("Q") : "F " + std::to_string(a.field().characteristic()))
      << '\n';
  for (auto v : q.vertices()) out << "vertex " << q.vertex_name(v) << '\n';
  for (auto x : q.arrows()) {
    out << "arrow " << q.arrow(x).name << ' ' << q.vertex_name(q.source(x)) << ' ' << q.vertex_name(q.target(x))
        << '\n';
  }
  for (const auto& r : a.relations()) out << "rel " << traversal(q, r) << '\n';
  return out.str();
}

MonomialAlgebra load_algebra(const std::string& file, BuildOptions options) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open '" + file + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str(), options);
}

}  // namespace hochglue
