#include "quiverlab/dsl.hpp"

#include "quiverlab/rational.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace quiverlab {

namespace {

std::string format_position(int line, int column, const std::string& message) {
  std::ostringstream out;
  out << "line " << line << ", column " << column << ": " << message;
  return out.str();
}

struct Token {
  std::string text;
  int column = 0;  // 1-based position in the source line
};

// Whitespace-delimited tokens; ':' and '->' are split off as tokens of their
// own so that "a:" or "1->2" lex the same as the spaced form.
std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  const int n = static_cast<int>(line.size());
  int i = 0;
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    int start = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::string raw = line.substr(start, i - start);
    int base = start + 1;
    // Split the raw run at every ':' and every "->".
    std::size_t pos = 0;
    std::size_t from = 0;
    auto flush = [&](std::size_t end) {
      if (end > from) {
        tokens.push_back(
            {raw.substr(from, end - from), base + static_cast<int>(from)});
      }
    };
    while (pos < raw.size()) {
      if (raw[pos] == ':') {
        flush(pos);
        tokens.push_back({":", base + static_cast<int>(pos)});
        from = ++pos;
      } else if (raw[pos] == '-' && pos + 1 < raw.size() &&
                 raw[pos + 1] == '>') {
        flush(pos);
        tokens.push_back({"->", base + static_cast<int>(pos)});
        pos += 2;
        from = pos;
      } else {
        ++pos;
      }
    }
    flush(raw.size());
  }
  return tokens;
}

// Column just past the final token, for "something is missing here" errors.
int end_column(const std::vector<Token>& tokens) {
  const Token& last = tokens.back();
  return last.column + static_cast<int>(last.text.size()) + 1;
}

bool valid_identifier(const std::string& text) {
  if (text.empty()) return false;
  if (text[0] == '+' || text[0] == '-') return false;
  for (char c : text) {
    if (c == '#' || c == ':' || c == '.' || c == '>' || c == '=') return false;
  }
  return true;
}

// Coefficient tokens are unsigned integers or fractions; the sign lives in
// the preceding '+'/'-' token.
bool coefficient_shaped(const std::string& text) {
  if (text.empty()) return false;
  std::size_t slash = text.find('/');
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  if (slash == std::string::npos) return digits(text);
  return digits(std::string_view(text).substr(0, slash)) &&
         digits(std::string_view(text).substr(slash + 1));
}

class Parser {
 public:
  QuiverDocument run(std::string_view text) {
    int lineno = 0;
    std::size_t offset = 0;
    while (offset <= text.size()) {
      std::size_t eol = text.find('\n', offset);
      std::string line(text.substr(
          offset, eol == std::string_view::npos ? std::string_view::npos
                                                : eol - offset));
      ++lineno;
      parse_line(line, lineno);
      if (eol == std::string_view::npos) break;
      offset = eol + 1;
    }
    finish(lineno);
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(int line, int column, const std::string& message) {
    throw ParseError(line, column, message);
  }

  void parse_line(std::string& line, int lineno) {
    if (std::size_t hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) return;

    const std::string& head = tokens[0].text;
    if (head == "quiver") {
      parse_quiver(tokens, lineno);
    } else if (!saw_quiver_) {
      fail(lineno, tokens[0].column,
           "the file must start with a 'quiver NAME' line");
    } else if (head == "vertex") {
      parse_vertex(tokens, lineno);
    } else if (head == "arrow") {
      parse_arrow(tokens, lineno);
    } else if (head == "relation") {
      parse_relation(tokens, lineno);
    } else if (head == "grading") {
      parse_grading(tokens, lineno);
    } else {
      fail(lineno, tokens[0].column, "unknown statement '" + head + "'");
    }
  }

  void parse_quiver(const std::vector<Token>& tokens, int lineno) {
    if (saw_quiver_) {
      fail(lineno, tokens[0].column, "duplicate 'quiver' line");
    }
    if (tokens.size() < 2) {
      fail(lineno, end_column(tokens), "expected a quiver name");
    }
    if (tokens.size() > 2) {
      fail(lineno, tokens[2].column, "expected exactly one quiver name");
    }
    if (!valid_identifier(tokens[1].text)) {
      fail(lineno, tokens[1].column,
           "invalid identifier '" + tokens[1].text + "'");
    }
    doc_.name = tokens[1].text;
    saw_quiver_ = true;
  }

  void parse_vertex(const std::vector<Token>& tokens, int lineno) {
    if (tokens.size() < 2) {
      fail(lineno, end_column(tokens), "expected at least one vertex name");
    }
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const Token& t = tokens[i];
      if (!valid_identifier(t.text)) {
        fail(lineno, t.column, "invalid identifier '" + t.text + "'");
      }
      if (doc_.bound.quiver.vertex_id(t.text)) {
        fail(lineno, t.column, "duplicate vertex '" + t.text + "'");
      }
      doc_.bound.quiver.add_vertex(t.text);
    }
  }

  int require_vertex_token(const Token& t, int lineno) {
    if (auto id = doc_.bound.quiver.vertex_id(t.text)) return *id;
    fail(lineno, t.column, "unknown vertex '" + t.text + "'");
  }

  void parse_arrow(const std::vector<Token>& tokens, int lineno) {
    auto want = [&](std::size_t index, const std::string& what) -> const
        Token& {
      if (index >= tokens.size()) {
        fail(lineno, end_column(tokens), "expected " + what);
      }
      return tokens[index];
    };
    const Token& name = want(1, "an arrow name");
    if (!valid_identifier(name.text)) {
      fail(lineno, name.column, "invalid identifier '" + name.text + "'");
    }
    if (doc_.bound.quiver.arrow_id(name.text)) {
      fail(lineno, name.column, "duplicate arrow '" + name.text + "'");
    }
    const Token& colon = want(2, "':' after the arrow name");
    if (colon.text != ":") {
      fail(lineno, colon.column, "expected ':' after the arrow name");
    }
    const Token& src = want(3, "a source vertex");
    int source = require_vertex_token(src, lineno);
    const Token& sep = want(4, "'->' between source and target");
    if (sep.text != "->") {
      fail(lineno, sep.column, "expected '->' between source and target");
    }
    const Token& dst = want(5, "a target vertex");
    int target = require_vertex_token(dst, lineno);
    if (tokens.size() > 6) {
      fail(lineno, tokens[6].column, "unexpected trailing tokens");
    }
    doc_.bound.quiver.add_arrow(name.text, source, target);
  }

  Path parse_term(const Token& token, int lineno) {
    const Quiver& q = doc_.bound.quiver;
    std::vector<int> arrows;
    std::size_t from = 0;
    const std::string& text = token.text;
    while (true) {
      std::size_t dot = text.find('.', from);
      std::string step = text.substr(
          from, dot == std::string::npos ? std::string::npos : dot - from);
      int column = token.column + static_cast<int>(from);
      if (step.empty()) {
        fail(lineno, column, "empty step in path term '" + text + "'");
      }
      if (auto id = q.arrow_id(step)) {
        arrows.push_back(*id);
      } else {
        fail(lineno, column, "unknown arrow '" + step + "'");
      }
      if (dot == std::string::npos) break;
      from = dot + 1;
    }
    Path path = arrow_path(q, arrows[0]);
    for (std::size_t i = 1; i < arrows.size(); ++i) {
      const Arrow& next = q.arrow(arrows[i]);
      if (path.target != next.source) {
        fail(lineno, token.column,
             "arrows '" + q.arrow(path.arrows.back()).name + "' and '" +
                 next.name + "' do not compose in '" + text + "'");
      }
      path = path.then(arrow_path(q, arrows[i]));
    }
    return path;
  }

  void parse_relation(const std::vector<Token>& tokens, int lineno) {
    if (tokens.size() < 2) {
      fail(lineno, end_column(tokens), "expected a path term");
    }
    std::vector<PathTerm> terms;
    terms.push_back({Rational(1), parse_term(tokens[1], lineno)});
    std::size_t i = 2;
    while (i < tokens.size()) {
      const Token& sign = tokens[i];
      if (sign.text != "+" && sign.text != "-") {
        fail(lineno, sign.column, "expected '+' or '-' between terms");
      }
      Rational coef = sign.text == "-" ? Rational(-1) : Rational(1);
      ++i;
      if (i >= tokens.size()) {
        fail(lineno, end_column(tokens), "expected a path term");
      }
      if (coefficient_shaped(tokens[i].text) && i + 1 < tokens.size()) {
        auto value = parse_rational(tokens[i].text);
        if (!value) {
          fail(lineno, tokens[i].column,
               "malformed coefficient '" + tokens[i].text + "'");
        }
        coef *= *value;
        ++i;
      }
      terms.push_back({coef, parse_term(tokens[i], lineno)});
      ++i;
    }
    try {
      Relation rel = make_relation(doc_.bound.quiver, std::move(terms));
      const Rational lead = rel.terms[0].coef;
      for (PathTerm& term : rel.terms) term.coef /= lead;
      doc_.bound.relations.push_back(std::move(rel));
    } catch (const std::invalid_argument& e) {
      fail(lineno, tokens[1].column, e.what());
    }
  }

  void parse_grading(const std::vector<Token>& tokens, int lineno) {
    if (tokens.size() < 2) {
      fail(lineno, end_column(tokens), "expected ID=VALUE assignments");
    }
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const Token& t = tokens[i];
      std::size_t eq = t.text.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == t.text.size()) {
        fail(lineno, t.column, "expected ID=VALUE, got '" + t.text + "'");
      }
      std::string name = t.text.substr(0, eq);
      std::string value = t.text.substr(eq + 1);
      auto id = doc_.bound.quiver.vertex_id(name);
      if (!id) {
        fail(lineno, t.column, "unknown vertex '" + name + "'");
      }
      errno = 0;
      char* end = nullptr;
      long long parsed = std::strtoll(value.c_str(), &end, 10);
      if (errno != 0 || end == value.c_str() || *end != '\0') {
        fail(lineno, t.column + static_cast<int>(eq) + 1,
             "malformed grading value '" + value + "'");
      }
      for (const auto& [seen, _] : grading_pairs_) {
        if (seen == *id) {
          fail(lineno, t.column, "vertex '" + name + "' graded twice");
        }
      }
      grading_pairs_.emplace_back(*id, parsed);
      last_grading_line_ = lineno;
    }
  }

  void finish(int last_line) {
    if (!saw_quiver_) {
      fail(last_line, 1, "the file must contain a 'quiver NAME' line");
    }
    if (grading_pairs_.empty()) return;
    const int nv = doc_.bound.quiver.vertex_count();
    if (static_cast<int>(grading_pairs_.size()) != nv) {
      fail(last_grading_line_, 1,
           "grading assigns " + std::to_string(grading_pairs_.size()) +
               " of " + std::to_string(nv) + " vertices");
    }
    Grading g;
    g.values.assign(static_cast<std::size_t>(nv), 0);
    for (const auto& [vertex, value] : grading_pairs_) {
      g.values[static_cast<std::size_t>(vertex)] = value;
    }
    doc_.grading = std::move(g);
  }

  QuiverDocument doc_;
  bool saw_quiver_ = false;
  std::vector<std::pair<int, long long>> grading_pairs_;
  int last_grading_line_ = 1;
};

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(format_position(line, column, message)),
      line_(line),
      column_(column),
      detail_(message) {}

bool operator==(const QuiverDocument& a, const QuiverDocument& b) {
  if (a.name != b.name || a.grading != b.grading ||
      a.bound.relations != b.bound.relations) {
    return false;
  }
  const Quiver& qa = a.bound.quiver;
  const Quiver& qb = b.bound.quiver;
  if (qa.vertex_count() != qb.vertex_count() ||
      qa.arrow_count() != qb.arrow_count()) {
    return false;
  }
  for (int v = 0; v < qa.vertex_count(); ++v) {
    if (qa.vertex_name(v) != qb.vertex_name(v)) return false;
  }
  for (int arrow = 0; arrow < qa.arrow_count(); ++arrow) {
    const Arrow& x = qa.arrow(arrow);
    const Arrow& y = qb.arrow(arrow);
    if (x.name != y.name || x.source != y.source || x.target != y.target) {
      return false;
    }
  }
  return true;
}

QuiverDocument parse_quiver_document(std::string_view text) {
  return Parser().run(text);
}

std::string serialize(const QuiverDocument& doc) {
  std::ostringstream out;
  const Quiver& q = doc.bound.quiver;
  out << "quiver " << doc.name << "\n";
  if (q.vertex_count() > 0) {
    out << "vertex";
    for (int v = 0; v < q.vertex_count(); ++v) out << ' ' << q.vertex_name(v);
    out << "\n";
  }
  for (int arrow = 0; arrow < q.arrow_count(); ++arrow) {
    const Arrow& a = q.arrow(arrow);
    out << "arrow " << a.name << ": " << q.vertex_name(a.source) << " -> "
        << q.vertex_name(a.target) << "\n";
  }
  for (const Relation& rel : doc.bound.relations) {
    Relation scaled = rel;
    const Rational lead = scaled.terms[0].coef;
    for (PathTerm& term : scaled.terms) term.coef /= lead;
    out << "relation " << relation_to_string(q, scaled) << "\n";
  }
  if (doc.grading) {
    out << "grading";
    for (int v = 0; v < q.vertex_count(); ++v) {
      out << ' ' << q.vertex_name(v) << '=' << doc.grading->at(v);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace quiverlab
