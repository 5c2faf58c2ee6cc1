#include "dynacount/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace dynacount {

namespace {

enum class TokKind { ident, integer, pipe, comma, if_sym, not_kw, dot, lparen, rparen, eof };

struct Token {
  TokKind kind;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_ws();
    SourceSpan span{line_, col_};
    if (pos_ >= text_.size()) return {TokKind::eof, "", span};
    char c = text_[pos_];
    if (c == '.') return advance({TokKind::dot, ".", span});
    if (c == '|') return advance({TokKind::pipe, "|", span});
    if (c == ',') return advance({TokKind::comma, ",", span});
    if (c == '(') return advance({TokKind::lparen, "(", span});
    if (c == ')') return advance({TokKind::rparen, ")", span});
    if (c == ':') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
        bump();
        bump();
        return {TokKind::if_sym, ":-", span};
      }
      throw SyntaxError("expected ':-'", span);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      std::string t;
      if (c == '-') {
        t += c;
        bump();
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          throw SyntaxError("stray '-'", span);
      }
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        t += text_[pos_];
        bump();
      }
      return {TokKind::integer, t, span};
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string t;
      while (pos_ < text_.size() && ident_char(text_[pos_])) {
        t += text_[pos_];
        bump();
      }
      if (t == "not") return {TokKind::not_kw, t, span};
      return {TokKind::ident, t, span};
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", span);
  }

 private:
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  Token advance(Token t) {
    bump();
    return t;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { cur_ = lex_.next(); }

  GroundProgram run() {
    while (cur_.kind != TokKind::eof) parse_rule();
    return builder_.finish();
  }

 private:
  void parse_rule() {
    std::vector<AtomId> head, pos, neg;
    SourceSpan start = cur_.span;
    bool has_head = false, has_body = false;
    if (cur_.kind == TokKind::ident) {
      has_head = true;
      head.push_back(parse_atom());
      while (cur_.kind == TokKind::pipe) {
        eat(TokKind::pipe);
        head.push_back(parse_atom());
      }
    } else if (cur_.kind == TokKind::not_kw) {
      throw SyntaxError("'not' is not allowed in a rule head", cur_.span);
    }
    if (cur_.kind == TokKind::if_sym) {
      eat(TokKind::if_sym);
      if (cur_.kind != TokKind::dot) {
        has_body = true;
        parse_literal(pos, neg);
        while (cur_.kind == TokKind::comma) {
          eat(TokKind::comma);
          parse_literal(pos, neg);
        }
      }
    }
    if (cur_.kind != TokKind::dot)
      throw SyntaxError("expected '.' terminating the rule", cur_.span);
    eat(TokKind::dot);
    if (!has_head && !has_body && pos.empty() && neg.empty() && head.empty()) {
      // ":-." reaches here with has_body false as well; both are vacuous.
      throw SyntaxError("rule with neither head nor body", start);
    }
    builder_.rule(std::move(head), std::move(pos), std::move(neg));
  }

  void parse_literal(std::vector<AtomId>& pos, std::vector<AtomId>& neg) {
    if (cur_.kind == TokKind::not_kw) {
      eat(TokKind::not_kw);
      neg.push_back(parse_atom());
    } else {
      pos.push_back(parse_atom());
    }
  }

  AtomId parse_atom() {
    if (cur_.kind != TokKind::ident)
      throw SyntaxError("expected atom", cur_.span);
    std::string name = cur_.text;
    eat(TokKind::ident);
    if (cur_.kind == TokKind::lparen) {
      eat(TokKind::lparen);
      name += "(";
      name += parse_const();
      while (cur_.kind == TokKind::comma) {
        eat(TokKind::comma);
        name += ",";
        name += parse_const();
      }
      if (cur_.kind != TokKind::rparen)
        throw SyntaxError("expected ')'", cur_.span);
      eat(TokKind::rparen);
      name += ")";
    }
    return builder_.atom(name);
  }

  std::string parse_const() {
    if (cur_.kind != TokKind::ident && cur_.kind != TokKind::integer)
      throw SyntaxError("expected constant", cur_.span);
    std::string t = cur_.text;
    cur_ = lex_.next();
    return t;
  }

  void eat(TokKind k) {
    if (cur_.kind != k) throw SyntaxError("unexpected token", cur_.span);
    cur_ = lex_.next();
  }

  Lexer lex_;
  Token cur_;
  ProgramBuilder builder_;
};

}  // namespace

GroundProgram parse_program(std::string_view text) {
  return Parser(text).run();
}

std::string render_program(const GroundProgram& p) {
  std::string out;
  for (const Rule& r : p.rules) {
    bool first = true;
    for (AtomId a : r.head) {
      if (!first) out += " | ";
      out += p.atoms[a].name;
      first = false;
    }
    if (!r.pos_body.empty() || !r.neg_body.empty()) {
      if (!r.head.empty()) out += " ";
      out += ":- ";
      first = true;
      for (AtomId a : r.pos_body) {
        if (!first) out += ", ";
        out += p.atoms[a].name;
        first = false;
      }
      for (AtomId a : r.neg_body) {
        if (!first) out += ", ";
        out += "not " + p.atoms[a].name;
        first = false;
      }
    }
    out += ".\n";
  }
  return out;
}

EdgeListGraph parse_edge_list(std::string_view text) {
  EdgeListGraph g;
  std::map<std::string, int> index;
  auto intern = [&](const std::string& name) {
    auto [it, fresh] = index.emplace(name, static_cast<int>(g.names.size()));
    if (fresh) g.names.push_back(name);
    return it->second;
  };
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (auto c = line.find('%'); c != std::string_view::npos)
      line = line.substr(0, c);
    std::vector<std::string> words;
    std::string cur;
    for (char ch : line) {
      if (std::isspace(static_cast<unsigned char>(ch))) {
        if (!cur.empty()) words.push_back(std::move(cur)), cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) words.push_back(std::move(cur));
    if (words.empty()) {
      if (pos > text.size()) break;
      continue;
    }
    if (words.size() != 2)
      throw SyntaxError("expected two vertex names per line", {line_no, 1});
    if (words[0] == words[1]) throw SelfLoopError(words[0], {line_no, 1});
    int u = intern(words[0]);
    int v = intern(words[1]);
    if (u > v) std::swap(u, v);
    g.edges.emplace_back(u, v);
    if (pos > text.size()) break;
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

}  // namespace dynacount
