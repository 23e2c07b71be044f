#include "theta/dsl.hpp"

#include <cctype>

namespace theta {

namespace {

enum class Tok { Name, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  long long value = 0;
  SourceSpan span;
};

struct Lexer {
  const std::string& src;
  size_t pos = 0;
  int line = 1;
  int col = 1;
  std::vector<Diagnostic> errors;

  explicit Lexer(const std::string& s) : src(s) {}

  SourceSpan here(size_t begin, size_t end, int l, int c) const {
    return SourceSpan{begin, end, l, c};
  }

  void advance(size_t n) {
    for (size_t i = 0; i < n && pos < src.size(); ++i, ++pos) {
      if (src[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  }

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      while (pos < src.size() &&
             std::isspace(static_cast<unsigned char>(src[pos])))
        advance(1);
      const size_t begin = pos;
      const int l = line, c = col;
      if (pos >= src.size()) {
        out.push_back({Tok::End, "", 0, here(begin, begin, l, c)});
        return out;
      }
      const char ch = src[pos];
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        size_t e = pos;
        while (e < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[e])) ||
                src[e] == '_'))
          ++e;
        Token t{Tok::Name, src.substr(pos, e - pos), 0, {}};
        advance(e - pos);
        t.span = here(begin, pos, l, c);
        out.push_back(std::move(t));
        continue;
      }
      const bool neg = ch == '-' && pos + 1 < src.size() &&
                       std::isdigit(static_cast<unsigned char>(src[pos + 1]));
      if (std::isdigit(static_cast<unsigned char>(ch)) || neg) {
        size_t e = pos + (neg ? 1 : 0);
        while (e < src.size() &&
               std::isdigit(static_cast<unsigned char>(src[e])))
          ++e;
        const std::string text = src.substr(pos, e - pos);
        Token t{Tok::Int, text, 0, {}};
        if (text.size() > 12) {
          advance(e - pos);
          errors.push_back({here(begin, pos, l, c), "integer out of range", {}});
          out.push_back({Tok::End, "", 0, here(pos, pos, line, col)});
          return out;
        }
        t.value = std::stoll(text);
        advance(e - pos);
        t.span = here(begin, pos, l, c);
        out.push_back(std::move(t));
        continue;
      }
      Token t{Tok::Punct, std::string(1, ch), 0, {}};
      advance(1);
      t.span = here(begin, pos, l, c);
      out.push_back(std::move(t));
    }
  }
};

struct Parser {
  std::vector<Token> toks;
  size_t i = 0;
  std::vector<Diagnostic> diags;

  const Token& cur() const { return toks[i]; }
  void next() {
    if (i + 1 < toks.size()) ++i;
  }

  bool fail(const std::string& expected_what) {
    Diagnostic d;
    d.span = cur().span;
    d.message = "expected " + expected_what;
    d.expected.push_back(expected_what);
    diags.push_back(std::move(d));
    return false;
  }

  bool keyword(const std::string& kw) {
    if (cur().kind == Tok::Name && cur().text == kw) {
      next();
      return true;
    }
    return fail("'" + kw + "'");
  }

  bool punct(char ch) {
    if (cur().kind == Tok::Punct && cur().text[0] == ch) {
      next();
      return true;
    }
    return fail(std::string("'") + ch + "'");
  }

  bool integer(int& out) {
    if (cur().kind == Tok::Int) {
      out = static_cast<int>(cur().value);
      next();
      return true;
    }
    return fail("an integer");
  }

  bool rho(IrrSymbol& out) {
    // "1" (the trivial character) is a legal symbol name; an integer token
    // directly followed by '[' is a name, not a multiplicity.
    const bool int_name = cur().kind == Tok::Int && i + 1 < toks.size() &&
                          toks[i + 1].kind == Tok::Punct &&
                          toks[i + 1].text[0] == '[';
    if (cur().kind != Tok::Name && !int_name) return fail("a symbol name");
    out.id = cur().text;
    next();
    if (!punct('[')) return false;
    if (!integer(out.dim)) return false;
    if (!punct(',')) return false;
    if (cur().kind != Tok::Name) return fail("a duality tag");
    auto d = duality_from_string(cur().text);
    if (!d) return fail("a duality tag");
    out.duality = *d;
    next();
    while (cur().kind == Tok::Punct && cur().text[0] == ',') {
      next();
      if (cur().kind != Tok::Name) return fail("a flag");
      const std::string flag = cur().text;
      next();
      if (flag == "triv") {
        out.contains_trivial = true;
        continue;
      }
      if (flag != "xV" && flag != "xW") return fail("a flag");
      int exp = 1;
      if (cur().kind == Tok::Punct && cur().text[0] == '^') {
        next();
        if (!integer(exp)) return false;
      }
      (flag == "xV" ? out.twist.v : out.twist.w) += exp;
    }
    return punct(']');
  }

  bool sl2(int& out) {
    if (!(cur().kind == Tok::Name && cur().text == "S")) return fail("'S('");
    next();
    if (!punct('(')) return false;
    if (!integer(out)) return false;
    return punct(')');
  }

  bool term(WeightedSummand& out) {
    out = WeightedSummand{};
    const bool int_name = cur().kind == Tok::Int && i + 1 < toks.size() &&
                          toks[i + 1].kind == Tok::Punct &&
                          toks[i + 1].text[0] == '[';
    if (cur().kind == Tok::Int && !int_name) {
      out.mult = static_cast<int>(cur().value);
      next();
      if (!punct('*')) return false;
    }
    if (!rho(out.s.rho)) return false;
    if (!punct('*')) return false;
    if (!sl2(out.s.a)) return false;
    if (!punct('*')) return false;
    if (!sl2(out.s.b)) return false;
    if (cur().kind == Tok::Punct && cur().text[0] == '@') {
      next();
      int num = 0;
      if (!integer(num)) return false;
      if (cur().kind == Tok::Punct && cur().text[0] == '/') {
        next();
        int den = 0;
        if (!integer(den)) return false;
        if (den != 2) return fail("denominator 2");
        out.s.half_shift_x2 = num;
      } else {
        out.s.half_shift_x2 = 2 * num;
      }
    }
    return true;
  }

  bool param(AParameter& out) {
    if (!keyword("case")) return false;
    if (cur().kind != Tok::Name) return fail("a case tag (O, U0, U1)");
    if (cur().text == "O")
      out.case_tag = CaseTag::O;
    else if (cur().text == "U0")
      out.case_tag = CaseTag::U0;
    else if (cur().text == "U1")
      out.case_tag = CaseTag::U1;
    else
      return fail("a case tag (O, U0, U1)");
    next();
    if (!keyword("side")) return false;
    if (cur().kind != Tok::Name || (cur().text != "G" && cur().text != "H"))
      return fail("a side tag (G, H)");
    out.side = cur().text == "G" ? Side::G : Side::H;
    next();
    if (!keyword("dim")) return false;
    if (!integer(out.target_dim)) return false;
    if (!punct(':')) return false;
    if (cur().kind == Tok::End) return true;
    while (true) {
      WeightedSummand ws;
      if (!term(ws)) return false;
      out.summands.push_back(ws);
      if (cur().kind == Tok::Punct && cur().text[0] == '+') {
        next();
        continue;
      }
      break;
    }
    if (cur().kind != Tok::End) return fail("'+' or end of input");
    return true;
  }
};

}  // namespace

ParseResult parse_parameter(const std::string& text) {
  ParseResult res;
  Lexer lex(text);
  Parser p{lex.run(), 0, {}};
  if (!lex.errors.empty()) {
    res.diagnostics = lex.errors;
    return res;
  }
  AParameter out;
  if (!p.param(out)) {
    res.diagnostics = std::move(p.diags);
    if (res.diagnostics.empty())
      res.diagnostics.push_back({SourceSpan{}, "parse failure", {}});
    return res;
  }
  out.canonicalize();
  const auto violations = out.violations();
  if (!violations.empty()) {
    for (const auto& v : violations) {
      Diagnostic d;
      d.span = SourceSpan{0, text.size(), 1, 1};
      d.message = v;
      res.diagnostics.push_back(std::move(d));
    }
    return res;
  }
  res.value = std::move(out);
  return res;
}

std::string print_parameter(const AParameter& p) {
  AParameter canon = p;
  canon.canonicalize();
  std::string out = "case " + to_string(canon.case_tag) + " side " +
                    to_string(canon.side) + " dim " +
                    std::to_string(canon.target_dim) + ":";
  bool first = true;
  for (const auto& ws : canon.summands) {
    out += first ? " " : " + ";
    first = false;
    if (ws.mult != 1) out += std::to_string(ws.mult) + "*";
    out += ws.s.rho.id + "[" + std::to_string(ws.s.rho.dim) + "," +
           to_string(ws.s.rho.duality);
    if (ws.s.rho.contains_trivial) out += ",triv";
    auto gen = [&out](const char* name, int e) {
      if (e == 0) return;
      out += ",";
      out += name;
      if (e != 1) out += "^" + std::to_string(e);
    };
    gen("xV", ws.s.rho.twist.v);
    gen("xW", ws.s.rho.twist.w);
    out += "]*S(" + std::to_string(ws.s.a) + ")*S(" + std::to_string(ws.s.b) +
           ")";
    if (ws.s.half_shift_x2 != 0) out += "@" + half_str(ws.s.half_shift_x2);
  }
  return out;
}

}  // namespace theta
