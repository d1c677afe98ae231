/* Recursive-descent parser and printer for the formula grammar.
 *
 *   iff  := impl ('<->' iff)?      right-assoc
 *   impl := or  ('->' impl)?       right-assoc
 *   or   := and ('|' and)*
 *   and  := not ('&' not)*
 *   not  := ('!' | '~') not | prim
 *   prim := atom | 'true' | 'false' | '(' iff ')'
 */
#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "rev/formula.hpp"

namespace rev {

namespace {

enum class Tok { Atom, True, False, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (c == '_') {
      // reserved minted atoms ("_x0", ...) are intentionally unwritable
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      throw ReservedAtomError(std::string(text.substr(i, j - i)), start);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      std::string word(text.substr(i, j - i));
      if (word == "true")
        out.push_back({Tok::True, word, start});
      else if (word == "false")
        out.push_back({Tok::False, word, start});
      else
        out.push_back({Tok::Atom, word, start});
      i = j;
      continue;
    }
    switch (c) {
      case '!':
      case '~':
        out.push_back({Tok::Not, {c}, start});
        ++i;
        break;
      case '&':
        out.push_back({Tok::And, "&", start});
        ++i;
        break;
      case '|':
        out.push_back({Tok::Or, "|", start});
        ++i;
        break;
      case '(':
        out.push_back({Tok::LParen, "(", start});
        ++i;
        break;
      case ')':
        out.push_back({Tok::RParen, ")", start});
        ++i;
        break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back({Tok::Implies, "->", start});
          i += 2;
        } else {
          throw ParseError("expected '->'", start, "->");
        }
        break;
      case '<':
        if (text.substr(i, 3) == "<->") {
          out.push_back({Tok::Iff, "<->", start});
          i += 3;
        } else {
          throw ParseError("expected '<->'", start, "<->");
        }
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         start, "atom, constant, '!', '~' or '('");
    }
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const Signature& sig)
      : toks_(std::move(toks)), sig_(sig) {}

  Formula run() {
    Formula f = iff();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  void expect(Tok kind, const std::string& what) {
    if (peek().kind != kind)
      throw ParseError("expected " + what, peek().pos, what);
    ++pos_;
  }

  Formula iff() {
    Formula l = impl();
    if (peek().kind == Tok::Iff) {
      take();
      return Formula::equivalence(l, iff());
    }
    return l;
  }

  Formula impl() {
    Formula l = disj();
    if (peek().kind == Tok::Implies) {
      take();
      return Formula::implication(l, impl());
    }
    return l;
  }

  Formula disj() {
    Formula l = conj();
    while (peek().kind == Tok::Or) {
      take();
      l = Formula::disjunction(l, conj());
    }
    return l;
  }

  Formula conj() {
    Formula l = neg();
    while (peek().kind == Tok::And) {
      take();
      l = Formula::conjunction(l, neg());
    }
    return l;
  }

  Formula neg() {
    if (peek().kind == Tok::Not) {
      take();
      return Formula::negation(neg());
    }
    return prim();
  }

  Formula prim() {
    switch (peek().kind) {
      case Tok::True:
        take();
        return Formula::constant(true);
      case Tok::False:
        take();
        return Formula::constant(false);
      case Tok::Atom: {
        Token t = take();
        if (sig_.isReserved(t.text)) throw ReservedAtomError(t.text, t.pos);
        if (!sig_.indexOf(t.text)) throw UnknownAtomError(t.text, t.pos);
        return Formula::atom(t.text);
      }
      case Tok::LParen: {
        take();
        Formula f = iff();
        expect(Tok::RParen, "')'");
        return f;
      }
      default:
        throw ParseError("expected a formula", peek().pos,
                         "atom, constant, '!', '~' or '('");
    }
  }

  std::vector<Token> toks_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

int precedence(Conn k) {
  switch (k) {
    case Conn::Iff:
      return 1;
    case Conn::Implies:
      return 2;
    case Conn::Or:
      return 3;
    case Conn::And:
      return 4;
    case Conn::Not:
      return 5;
    default:
      return 6;  // atoms, constants
  }
}

void printInto(const Formula& f, std::string& out, int parent) {
  const int prec = precedence(f.kind());
  const bool parens = prec < parent;
  if (parens) out += '(';
  switch (f.kind()) {
    case Conn::True:
      out += "true";
      break;
    case Conn::False:
      out += "false";
      break;
    case Conn::Atom:
      out += f.atomName();
      break;
    case Conn::Not:
      out += '!';
      printInto(f.left(), out, precedence(Conn::Not));
      break;
    case Conn::And:
      printInto(f.left(), out, prec);
      out += " & ";
      printInto(f.right(), out, prec + 1);
      break;
    case Conn::Or:
      printInto(f.left(), out, prec);
      out += " | ";
      printInto(f.right(), out, prec + 1);
      break;
    case Conn::Implies:
      printInto(f.left(), out, prec + 1);  // right-assoc
      out += " -> ";
      printInto(f.right(), out, prec);
      break;
    case Conn::Iff:
      printInto(f.left(), out, prec + 1);
      out += " <-> ";
      printInto(f.right(), out, prec);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

Formula parse(std::string_view text, const Signature& sig) {
  return Parser(lex(text), sig).run();
}

std::vector<std::string> atomsInText(std::string_view text) {
  std::vector<std::string> out;
  for (const Token& t : lex(text)) {
    if (t.kind != Tok::Atom) continue;
    if (std::find(out.begin(), out.end(), t.text) == out.end())
      out.push_back(t.text);
  }
  return out;
}

std::string printFormula(const Formula& f) {
  std::string out;
  printInto(f, out, 0);
  return out;
}

}  // namespace rev
