#include "gammalab/document.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gammalab {
namespace {

enum class Tok { Ident, Int, LBrace, RBrace, Equals, Semi, Comma, Arrow, Colon, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Equals: return "'='";
    case Tok::Semi: return "';'";
    case Tok::Comma: return "','";
    case Tok::Arrow: return "'->'";
    case Tok::Colon: return "':'";
    case Tok::End: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    const int tl = line;
    const int tc = col;
    auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), tl, tc});
      advance();
    };
    switch (c) {
      case '{': single(Tok::LBrace); continue;
      case '}': single(Tok::RBrace); continue;
      case '=': single(Tok::Equals); continue;
      case ';': single(Tok::Semi); continue;
      case ',': single(Tok::Comma); continue;
      case ':': single(Tok::Colon); continue;
      default: break;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", tl, tc});
      advance();
      advance();
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits += text[i];
        advance();
      }
      out.push_back({Tok::Int, digits, tl, tc});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' ||
                                 text[i] == '.')) {
        word += text[i];
        advance();
      }
      out.push_back({Tok::Ident, word, tl, tc});
      continue;
    }
    throw ParseError(ErrorCode::Syntax, std::string("unexpected character '") + c + "'", tl, tc);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Document run() {
    while (peek().kind != Tok::End) {
      const Token& kw = peek();
      if (kw.kind == Tok::Ident && kw.text == "space") {
        parse_space();
      } else if (kw.kind == Tok::Ident && kw.text == "operation") {
        parse_operation();
      } else if (kw.kind == Tok::Ident && kw.text == "map") {
        parse_map();
      } else {
        fail(kw, "expected 'space', 'operation' or 'map'");
      }
    }
    return std::move(doc_);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const Token& at, const std::string& msg, ErrorCode code = ErrorCode::Syntax) {
    throw ParseError(code, msg, at.line, at.column);
  }

  const Token& expect(Tok kind) {
    const Token& t = next();
    if (t.kind != kind) {
      fail(t, std::string("expected ") + describe(kind) + ", found " +
                  (t.kind == Tok::End ? describe(t.kind) : "'" + t.text + "'"));
    }
    return t;
  }

  void expect_word(const char* word) {
    const Token& t = next();
    if (t.kind != Tok::Ident || t.text != word) {
      fail(t, std::string("expected '") + word + "'");
    }
  }

  bool skip_separators() {
    bool any = false;
    while (peek().kind == Tok::Semi || peek().kind == Tok::Comma) {
      ++pos_;
      any = true;
    }
    return any;
  }

  int parse_int() {
    const Token& t = expect(Tok::Int);
    if (t.text.size() > 6) fail(t, "integer " + t.text + " is too large", ErrorCode::PointOutOfRange);
    return std::stoi(t.text);
  }

  // Points are checked against `points` once it is known; the positions are
  // kept so range errors point at the offending integer.
  struct RawSet {
    std::vector<std::pair<int, Token>> points;
    Token open;
  };

  RawSet parse_set() {
    RawSet out{{}, expect(Tok::LBrace)};
    while (true) {
      skip_separators();
      if (peek().kind == Tok::RBrace) break;
      const Token at = peek();
      out.points.emplace_back(parse_int(), at);
    }
    expect(Tok::RBrace);
    return out;
  }

  Subset to_subset(const RawSet& raw, int n) {
    Subset s;
    for (const auto& [p, at] : raw.points) {
      if (p >= n) {
        fail(at, "point " + std::to_string(p) + " is outside a " + std::to_string(n) + "-point space",
             ErrorCode::PointOutOfRange);
      }
      s = s.with(p);
    }
    return s;
  }

  void check_fresh(const Token& name, bool taken) {
    if (taken) fail(name, "name '" + name.text + "' is already declared", ErrorCode::DuplicateName);
  }

  void parse_space() {
    next();
    const Token name = expect(Tok::Ident);
    check_fresh(name, doc_.find_space(name.text) != nullptr);
    expect(Tok::LBrace);
    std::optional<int> points;
    std::vector<RawSet> opens;
    while (true) {
      skip_separators();
      const Token& t = peek();
      if (t.kind == Tok::RBrace) break;
      if (t.kind == Tok::Ident && t.text == "points") {
        next();
        expect(Tok::Equals);
        const Token at = peek();
        if (points) fail(at, "points given twice");
        points = parse_int();
        if (*points < 1 || *points > kMaxPoints) {
          fail(at, "point count must be between 1 and " + std::to_string(kMaxPoints), ErrorCode::CapExceeded);
        }
      } else if (t.kind == Tok::Ident && t.text == "open") {
        next();
        expect(Tok::Equals);
        opens.push_back(parse_set());
      } else {
        fail(t, "expected 'points' or 'open'");
      }
    }
    const Token close = expect(Tok::RBrace);
    if (!points) fail(close, "space '" + name.text + "' does not declare points");
    std::vector<unsigned> masks;
    for (const RawSet& raw : opens) masks.push_back(to_subset(raw, *points).index());
    ValidationResult v = validate_topology(*points, masks);
    if (!v.ok()) {
      std::string msg = "space '" + name.text + "' is not a topology";
      for (const TopologyError& e : v.errors) msg += "; " + e.message();
      fail(name, msg, ErrorCode::InvalidTopology);
    }
    doc_.spaces.push_back({name.text, std::move(*v.space)});
  }

  void parse_operation() {
    next();
    const Token name = expect(Tok::Ident);
    check_fresh(name, doc_.find_operation(name.text) != nullptr);
    expect_word("on");
    const Token space_name = expect(Tok::Ident);
    const NamedSpace* sp = doc_.find_space(space_name.text);
    if (!sp) fail(space_name, "unknown space '" + space_name.text + "'", ErrorCode::UnknownReference);
    const int n = sp->space.points();
    expect(Tok::LBrace);
    std::optional<OperationKind> kind;
    std::vector<std::pair<Subset, Subset>> pairs;
    while (true) {
      skip_separators();
      const Token t = peek();
      if (t.kind == Tok::RBrace) break;
      if (t.kind == Tok::Ident && t.text == "kind") {
        next();
        expect(Tok::Equals);
        const Token k = expect(Tok::Ident);
        if (k.text == "identity") {
          kind = OperationKind::Identity;
        } else if (k.text == "closure") {
          kind = OperationKind::Closure;
        } else if (k.text == "intcl") {
          kind = OperationKind::InteriorClosure;
        } else {
          fail(k, "unknown operation kind '" + k.text + "' (expected identity, closure or intcl)");
        }
      } else if (t.kind == Tok::Ident && t.text == "map") {
        next();
        const RawSet from = parse_set();
        expect(Tok::Arrow);
        const RawSet to = parse_set();
        const Subset u = to_subset(from, n);
        if (!sp->space.is_open(u)) {
          fail(from.open, to_string(u) + " is not an open set of '" + space_name.text + "'",
               ErrorCode::NotAnOpenSet);
        }
        for (const auto& [prev, _] : pairs) {
          if (prev == u) fail(from.open, "value for " + to_string(u) + " given twice", ErrorCode::DuplicateName);
        }
        pairs.emplace_back(u, to_subset(to, n));
      } else {
        fail(t, "expected 'kind' or 'map'");
      }
    }
    const Token close = expect(Tok::RBrace);
    if (kind && !pairs.empty()) fail(close, "operation gives both a kind and a table");
    try {
      Operation op = kind ? Operation::builtin(sp->space, *kind) : Operation::from_pairs(sp->space, pairs);
      doc_.operations.push_back({name.text, space_name.text, std::move(op)});
    } catch (const Error& e) {
      fail(name, "operation '" + name.text + "': " + e.what(), e.code());
    }
  }

  void parse_map() {
    next();
    const Token name = expect(Tok::Ident);
    check_fresh(name, doc_.find_map(name.text) != nullptr);
    expect(Tok::Colon);
    const Token dom_name = expect(Tok::Ident);
    expect(Tok::Arrow);
    const Token cod_name = expect(Tok::Ident);
    const NamedSpace* dom = doc_.find_space(dom_name.text);
    const NamedSpace* cod = doc_.find_space(cod_name.text);
    if (!dom) fail(dom_name, "unknown space '" + dom_name.text + "'", ErrorCode::UnknownReference);
    if (!cod) fail(cod_name, "unknown space '" + cod_name.text + "'", ErrorCode::UnknownReference);
    expect(Tok::LBrace);
    std::vector<int> table(dom->space.points(), -1);
    std::optional<std::string> gamma;
    std::optional<std::string> beta;
    while (true) {
      skip_separators();
      const Token t = peek();
      if (t.kind == Tok::RBrace) break;
      if (t.kind == Tok::Int) {
        const int x = parse_int();
        expect(Tok::Arrow);
        const Token yt = peek();
        const int y = parse_int();
        if (x >= dom->space.points()) {
          fail(t, "point " + std::to_string(x) + " is outside the domain", ErrorCode::PointOutOfRange);
        }
        if (y >= cod->space.points()) {
          fail(yt, "point " + std::to_string(y) + " is outside the " + std::to_string(cod->space.points()) +
                       "-point codomain",
               ErrorCode::PointOutOfRange);
        }
        if (table[x] >= 0) fail(t, "image of " + std::to_string(x) + " given twice", ErrorCode::DuplicateName);
        table[x] = y;
      } else if (t.kind == Tok::Ident && (t.text == "gamma" || t.text == "beta")) {
        next();
        expect(Tok::Equals);
        const Token op_name = expect(Tok::Ident);
        const NamedOperation* op = doc_.find_operation(op_name.text);
        if (!op) fail(op_name, "unknown operation '" + op_name.text + "'", ErrorCode::UnknownReference);
        const std::string& want = t.text == "gamma" ? dom_name.text : cod_name.text;
        if (op->space != want) {
          fail(op_name, "operation '" + op_name.text + "' is on '" + op->space + "', expected '" + want + "'",
               ErrorCode::UnknownReference);
        }
        (t.text == "gamma" ? gamma : beta) = op_name.text;
      } else {
        fail(t, "expected '<point> -> <point>', 'gamma' or 'beta'");
      }
    }
    const Token close = expect(Tok::RBrace);
    for (std::size_t x = 0; x < table.size(); ++x) {
      if (table[x] < 0) {
        fail(close, "map '" + name.text + "' gives no image for point " + std::to_string(x), ErrorCode::IncompleteMap);
      }
    }
    doc_.maps.push_back({name.text, dom_name.text, cod_name.text, std::move(table), gamma, beta});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Document doc_;
};

template <class T>
const T* find_named(const std::vector<T>& items, std::string_view name) {
  auto it = std::find_if(items.begin(), items.end(), [&](const T& t) { return t.name == name; });
  return it == items.end() ? nullptr : &*it;
}

}  // namespace

const NamedSpace* Document::find_space(std::string_view name) const { return find_named(spaces, name); }
const NamedOperation* Document::find_operation(std::string_view name) const {
  return find_named(operations, name);
}
const NamedMap* Document::find_map(std::string_view name) const { return find_named(maps, name); }

const NamedSpace& Document::space(std::string_view name) const {
  if (const auto* s = find_space(name)) return *s;
  throw Error(ErrorCode::UnknownReference, "unknown space '" + std::string(name) + "'");
}

const NamedOperation& Document::operation(std::string_view name) const {
  if (const auto* o = find_operation(name)) return *o;
  throw Error(ErrorCode::UnknownReference, "unknown operation '" + std::string(name) + "'");
}

const NamedMap& Document::map(std::string_view name) const {
  if (const auto* m = find_map(name)) return *m;
  throw Error(ErrorCode::UnknownReference, "unknown map '" + std::string(name) + "'");
}

Document parse_document(std::string_view text) { return Parser(tokenize(text)).run(); }

std::string render(const Document& doc) {
  std::ostringstream out;
  for (const NamedSpace& s : doc.spaces) {
    out << "space " << s.name << " {\n  points = " << s.space.points() << "\n";
    for (Subset u : s.space.opens()) out << "  open = " << to_spaced_string(u) << "\n";
    out << "}\n";
  }
  for (const NamedOperation& o : doc.operations) {
    out << "operation " << o.name << " on " << o.space << " {\n";
    if (o.op.kind() == OperationKind::Custom) {
      const auto& opens = o.op.space().opens();
      for (std::size_t i = 0; i < opens.size(); ++i) {
        out << "  map " << to_spaced_string(opens[i]) << " -> " << to_spaced_string(o.op.at(i)) << "\n";
      }
    } else {
      out << "  kind = " << to_string(o.op.kind()) << "\n";
    }
    out << "}\n";
  }
  for (const NamedMap& m : doc.maps) {
    out << "map " << m.name << " : " << m.dom << " -> " << m.cod << " {\n";
    for (std::size_t x = 0; x < m.table.size(); ++x) out << "  " << x << " -> " << m.table[x] << "\n";
    if (m.gamma) out << "  gamma = " << *m.gamma << "\n";
    if (m.beta) out << "  beta = " << *m.beta << "\n";
    out << "}\n";
  }
  return out.str();
}

}  // namespace gammalab
