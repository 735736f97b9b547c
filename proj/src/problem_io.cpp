#include "monorel/problem_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "monorel/linsub.hpp"

namespace monorel {

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

class Reader {
 public:
  explicit Reader(std::istream& in) {
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
      ++number;
      const auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      auto tokens = split_tokens(raw);
      if (!tokens.empty()) lines_.push_back({number, std::move(tokens)});
    }
  }

  bool done() const { return pos_ == lines_.size(); }
  const Line& next() {
    if (done()) fail(lines_.empty() ? 0 : lines_.back().number, "unexpected end of file");
    return lines_[pos_++];
  }

  std::vector<Vec> block(std::size_t width, const std::string& name) {
    std::vector<Vec> rows;
    while (true) {
      const Line& l = next();
      if (l.tokens.size() == 1 && l.tokens[0] == "end") return rows;
      if (l.tokens.size() != width) {
        fail(l.number, "block '" + name + "' expects " + std::to_string(width) + " entries per row, got " +
                           std::to_string(l.tokens.size()));
      }
      Vec row;
      for (const auto& t : l.tokens) {
        try {
          row.push_back(parse_scalar(t));
        } catch (const ParseError& e) {
          fail(l.number, e.what());
        }
      }
      rows.push_back(std::move(row));
    }
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

std::size_t parse_count(const Line& l) {
  if (l.tokens.size() != 2) fail(l.number, "expected '" + l.tokens[0] + " <count>'");
  const std::string& t = l.tokens[1];
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) fail(l.number, "not a count: '" + t + "'");
  return std::stoul(t);
}

std::vector<Point> to_points(const std::vector<Vec>& rows) {
  std::vector<Point> out;
  for (const auto& r : rows) out.push_back(Point::from_coordinates(r));
  return out;
}

void write_block(std::ostringstream& os, const std::string& name, const std::vector<Vec>& rows) {
  os << name << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << to_string(r[i]);
    os << '\n';
  }
  os << "end\n";
}

std::vector<Vec> mat_rows(const Mat& m) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

}  // namespace

Subspace SubspaceProblem::subspace() const { return Subspace::span(n, to_points(basis)); }

DoubleCone ConeProblem::cone() const { return DoubleCone(Subspace::span(n, to_points(skew)), to_points(generators)); }

Subspace SumProblem::result() const {
  return sum_composition(Subspace::span(n, to_points(first)), Subspace::span(m, to_points(second)), a);
}

std::string_view kind_name(const Problem& p) {
  static constexpr std::string_view names[] = {"subspace", "doublecone", "gossez", "sum"};
  return names[p.index()];
}

Problem parse_problem(std::istream& in) {
  Reader r(in);
  if (r.done()) throw ParseError("empty problem file");
  const Line& head = r.next();
  if (head.tokens.size() != 2 || head.tokens[0] != "kind") fail(head.number, "expected 'kind <name>' first");
  const std::string kind = head.tokens[1];
  if (kind != "subspace" && kind != "doublecone" && kind != "gossez" && kind != "sum") {
    fail(head.number, "unknown kind '" + kind + "'");
  }

  if (kind == "gossez") {
    GossezProblem g;
    bool have_x = false, have_v = false;
    while (!r.done()) {
      const Line& l = r.next();
      std::string rest;
      for (std::size_t i = 1; i < l.tokens.size(); ++i) rest += l.tokens[i] + " ";
      const bool is_x = l.tokens[0] == "x" && !have_x;
      if (!is_x && (l.tokens[0] != "v" || have_v)) fail(l.number, "unexpected '" + l.tokens[0] + "' in a gossez file");
      try {
        (is_x ? g.x : g.v) = parse_sequence(rest);
      } catch (const std::exception& e) {
        fail(l.number, e.what());
      }
      (is_x ? have_x : have_v) = true;
    }
    return g;
  }

  std::optional<std::size_t> n, m;
  std::optional<std::vector<Vec>> basis, skew, gens, first, second, amat;
  while (!r.done()) {
    const Line& l = r.next();
    const std::string& key = l.tokens[0];
    auto need_n = [&]() {
      if (!n) fail(l.number, "'" + key + "' block before 'n'");
      return *n;
    };
    auto once = [&](const auto& slot) {
      if (slot) fail(l.number, "repeated '" + key + "'");
      if (l.tokens.size() != 1) fail(l.number, "'" + key + "' takes no arguments");
    };
    if (key == "n") {
      if (n) fail(l.number, "repeated 'n'");
      n = parse_count(l);
      if (*n == 0) fail(l.number, "n must be positive");
    } else if (key == "m" && kind == "sum") {
      if (m) fail(l.number, "repeated 'm'");
      m = parse_count(l);
      if (*m == 0) fail(l.number, "m must be positive");
    } else if (key == "basis" && kind == "subspace") {
      once(basis);
      basis = r.block(2 * need_n(), key);
    } else if (key == "skew" && kind == "doublecone") {
      once(skew);
      skew = r.block(2 * need_n(), key);
    } else if (key == "generators" && kind == "doublecone") {
      once(gens);
      gens = r.block(2 * need_n(), key);
    } else if (key == "M" && kind == "sum") {
      once(first);
      first = r.block(2 * need_n(), key);
    } else if (key == "N" && kind == "sum") {
      once(second);
      if (!m) fail(l.number, "'N' block before 'm'");
      second = r.block(2 * *m, key);
    } else if (key == "A" && kind == "sum") {
      once(amat);
      if (!m) fail(l.number, "'A' block before 'm'");
      amat = r.block(need_n(), key);
      if (amat->size() != *m) fail(l.number, "'A' needs m rows");
    } else {
      fail(l.number, "unexpected '" + key + "' in a " + kind + " file");
    }
  }

  if (!n) throw ParseError("missing 'n'");
  if (kind == "subspace") {
    return SubspaceProblem{*n, basis.value_or(std::vector<Vec>{})};
  }
  if (kind == "doublecone") {
    ConeProblem c{*n, skew.value_or(std::vector<Vec>{}), gens.value_or(std::vector<Vec>{})};
    try {
      (void)c.cone();
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    return c;
  }
  if (kind == "sum") {
    if (!m || !first || !second || !amat) throw ParseError("a sum file needs m, M, N and A");
    return SumProblem{*n, *m, *first, *second, Mat::from_rows(*amat, *n)};
  }
  throw std::logic_error("parse_problem: unhandled kind");
}

Problem parse_problem(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_problem(in);
}

Problem read_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return parse_problem(in);
}

std::string write_problem(const Problem& p) {
  std::ostringstream os;
  os << "kind " << kind_name(p) << '\n';
  if (const auto* s = std::get_if<SubspaceProblem>(&p)) {
    os << "n " << s->n << '\n';
    write_block(os, "basis", s->basis);
  } else if (const auto* c = std::get_if<ConeProblem>(&p)) {
    os << "n " << c->n << '\n';
    write_block(os, "skew", c->skew);
    write_block(os, "generators", c->generators);
  } else if (const auto* g = std::get_if<GossezProblem>(&p)) {
    for (const auto& [key, seq] : {std::pair{"x", &g->x}, std::pair{"v", &g->v}}) {
      os << key << (seq->support().empty() ? "" : " ") << format_sequence(*seq) << '\n';
    }
  } else if (const auto* q = std::get_if<SumProblem>(&p)) {
    os << "n " << q->n << '\n' << "m " << q->m << '\n';
    write_block(os, "M", q->first);
    write_block(os, "N", q->second);
    write_block(os, "A", mat_rows(q->a));
  }
  return os.str();
}

Point parse_point(std::string_view text, std::size_t n) {
  const auto tokens = split_tokens(text);
  if (tokens.size() != 2 * n) {
    throw DimensionMismatch("point needs " + std::to_string(2 * n) + " coordinates, got " + std::to_string(tokens.size()));
  }
  Vec v;
  for (const auto& t : tokens) v.push_back(parse_scalar(t));
  return Point::from_coordinates(v);
}

FinSeq parse_sequence(std::string_view text) {
  std::vector<FinSeq::Entry> entries;
  for (const auto& tok : split_tokens(text)) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw ParseError("sequence entry '" + tok + "' is not index:value");
    const std::string idx = tok.substr(0, colon);
    if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad sequence index in '" + tok + "'");
    }
    entries.emplace_back(std::stoul(idx), parse_scalar(tok.substr(colon + 1)));
  }
  try {
    return FinSeq(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format_sequence(const FinSeq& s) {
  std::string out;
  for (const auto& [i, v] : s.support()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i) + ":" + to_string(v);
  }
  return out;
}

}  // namespace monorel
