#include "heis/expr.hpp"

#include <cctype>

namespace heis {

namespace {

ExprPtr make_atom(Gen g) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Atom;
  e->atom = g;
  e->source = gen_source(g);
  e->target = gen_target(g);
  return e;
}

ExprPtr make_id(Word w) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Id;
  e->word = w;
  e->source = w;
  e->target = std::move(w);
  return e;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  ExprPtr run() {
    ExprPtr e = sum();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char ch) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr sum() {
    ExprPtr acc = vcomp();
    while (true) {
      skip();
      if (pos_ >= text_.size()) break;
      char op = text_[pos_];
      if (op != '+' && op != '-') break;
      // a '-' immediately starting a number belongs to the next scalar only
      // when no left operand is pending, which cannot happen here
      ++pos_;
      ExprPtr rhs = vcomp();
      if (acc->source != rhs->source || acc->target != rhs->target)
        throw TypeError("sum of mismatched types: " + acc->source.str() + "->" +
                        acc->target.str() + " vs " + rhs->source.str() + "->" +
                        rhs->target.str());
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Sum;
      e->lhs = acc;
      e->rhs = rhs;
      e->scalar = op == '-' ? -1 : 1;
      e->source = acc->source;
      e->target = acc->target;
      acc = e;
    }
    return acc;
  }

  ExprPtr vcomp() {
    ExprPtr acc = hcomp();
    while (eat('.')) {
      // left operand is drawn on top: acc after rhs means rhs feeds acc
      ExprPtr below = hcomp();
      if (acc->source != below->target)
        throw TypeError("vertical composition mismatch: top expects " +
                        acc->source.str() + ", bottom produces " +
                        below->target.str());
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::VComp;
      e->lhs = acc;
      e->rhs = below;
      e->source = below->source;
      e->target = acc->target;
      acc = e;
    }
    return acc;
  }

  ExprPtr hcomp() {
    ExprPtr acc = primary();
    while (eat('*')) {
      ExprPtr rhs = primary();
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::HComp;
      e->lhs = acc;
      e->rhs = rhs;
      e->source = tensor(acc->source, rhs->source);
      e->target = tensor(acc->target, rhs->target);
      acc = e;
    }
    return acc;
  }

  ExprPtr primary() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("expected expression", pos_);
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      ExprPtr e = sum();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) ||
        (ch == '-' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      size_t start = pos_;
      if (ch == '-') ++pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      long long k = std::stoll(text_.substr(start, pos_ - start));
      ExprPtr child = primary();
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Scalar;
      e->scalar = k;
      e->lhs = child;
      e->source = child->source;
      e->target = child->target;
      return e;
    }
    if (text_.compare(pos_, 3, "id:") == 0) {
      pos_ += 3;
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (text_[pos_] == 'u' || text_[pos_] == 'd' ||
              (text_[pos_] == '1' && pos_ == start)))
        ++pos_;
      if (pos_ == start) throw ParseError("expected word after id:", pos_);
      return make_id(Word::parse(text_.substr(start, pos_ - start)));
    }
    if (text_.compare(pos_, 2, "t'") == 0 || text_.compare(pos_, 2, "tp") == 0) {
      pos_ += 2;
      return make_atom(Gen::Tp);
    }
    if (text_.compare(pos_, 2, "c'") == 0) {
      pos_ += 2;
      return make_atom(Gen::Cp);
    }
    if (text_.compare(pos_, 2, "d'") == 0) {
      pos_ += 2;
      return make_atom(Gen::Dp);
    }
    switch (ch) {
      case 's': ++pos_; return make_atom(Gen::S);
      case 't': ++pos_; return make_atom(Gen::T);
      case 'c': ++pos_; return make_atom(Gen::C);
      case 'd': ++pos_; return make_atom(Gen::D);
      case 'x': ++pos_; return make_atom(Gen::X);
      default: throw ParseError("unexpected character '" + std::string(1, ch) + "'", pos_);
    }
  }
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Sum: return 0;
    case Expr::Kind::VComp: return 1;
    case Expr::Kind::HComp: return 2;
    case Expr::Kind::Scalar: return 3;
    default: return 4;
  }
}

std::string atom_name(Gen g) {
  switch (g) {
    case Gen::S: return "s";
    case Gen::T: return "t";
    case Gen::Tp: return "t'";
    case Gen::C: return "c";
    case Gen::Cp: return "c'";
    case Gen::D: return "d";
    case Gen::Dp: return "d'";
    case Gen::X: return "x";
    default: throw std::logic_error("atom has no DSL name: " + gen_name(g));
  }
}

std::string print_prec(const ExprPtr& e, int min_prec) {
  std::string body;
  switch (e->kind) {
    case Expr::Kind::Atom: body = atom_name(e->atom); break;
    case Expr::Kind::Id: body = "id:" + e->word.str(); break;
    case Expr::Kind::Scalar:
      body = std::to_string(e->scalar) + " " + print_prec(e->lhs, 4);
      break;
    case Expr::Kind::HComp:
      body = print_prec(e->lhs, 2) + " * " + print_prec(e->rhs, 3);
      break;
    case Expr::Kind::VComp:
      body = print_prec(e->lhs, 1) + " . " + print_prec(e->rhs, 2);
      break;
    case Expr::Kind::Sum:
      body = print_prec(e->lhs, 0) + (e->scalar < 0 ? " - " : " + ") +
             print_prec(e->rhs, 1);
      break;
  }
  if (precedence(*e) < min_prec) return "(" + body + ")";
  return body;
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).run(); }

std::string print_expr(const ExprPtr& e) { return print_prec(e, 0); }

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind || a->scalar != b->scalar) return false;
  switch (a->kind) {
    case Expr::Kind::Atom: return a->atom == b->atom;
    case Expr::Kind::Id: return a->word == b->word;
    case Expr::Kind::Scalar: return expr_equal(a->lhs, b->lhs);
    default: return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
  }
}

Morphism evaluate(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Atom:
      switch (e->atom) {
        case Gen::T: return gen_t();
        case Gen::Tp: return gen_tp();
        case Gen::C: return gen_c();
        case Gen::Dp: return gen_dp();
        default:
          throw NonRestrictedAtom(
              "atom '" + atom_name(e->atom) +
              "' is outside the restricted fragment; use --mode oracle");
      }
    case Expr::Kind::Id: return Morphism::identity(e->word);
    case Expr::Kind::VComp: return compose(evaluate(e->lhs), evaluate(e->rhs));
    case Expr::Kind::HComp: return hcompose(evaluate(e->lhs), evaluate(e->rhs));
    case Expr::Kind::Sum: {
      Morphism l = evaluate(e->lhs);
      Morphism r = evaluate(e->rhs);
      return e->scalar < 0 ? l - r : l + r;
    }
    case Expr::Kind::Scalar: return e->scalar * evaluate(e->lhs);
  }
  throw std::logic_error("unreachable expression kind");
}

oracle::SparseMat evaluate_oracle(const ExprPtr& e, int n, const Word& frame_left,
                                  const Word& frame_right) {
  using namespace oracle;
  switch (e->kind) {
    case Expr::Kind::Atom: {
      SliceWord sw = {Slice{frame_left, e->atom, frame_right}};
      Word src = tensor(tensor(frame_left, e->source), frame_right);
      return eval_slices(expand_to_atoms(sw), src, n);
    }
    case Expr::Kind::Id: {
      Word w = tensor(tensor(frame_left, e->word), frame_right);
      return SparseMat::identity(space_for(w, n).dim);
    }
    case Expr::Kind::VComp:
      return mat_mul(evaluate_oracle(e->lhs, n, frame_left, frame_right),
                     evaluate_oracle(e->rhs, n, frame_left, frame_right));
    case Expr::Kind::HComp:
      // a tensor b as (a tensor id) after (id tensor b)
      return mat_mul(
          evaluate_oracle(e->lhs, n, frame_left,
                          tensor(e->rhs->target, frame_right)),
          evaluate_oracle(e->rhs, n, tensor(frame_left, e->lhs->source),
                          frame_right));
    case Expr::Kind::Sum: {
      SparseMat l = evaluate_oracle(e->lhs, n, frame_left, frame_right);
      SparseMat r = evaluate_oracle(e->rhs, n, frame_left, frame_right);
      return mat_add(l, e->scalar < 0 ? mat_scale(r, -1) : r);
    }
    case Expr::Kind::Scalar:
      return mat_scale(evaluate_oracle(e->lhs, n, frame_left, frame_right),
                       e->scalar);
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace heis
