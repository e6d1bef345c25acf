#include "tricgt/reference.hpp"

namespace tricgt {

namespace {

constexpr GameType P = GameType::T0;
constexpr GameType N = GameType::T1;
constexpr GameType O = GameType::T2;
constexpr GameType Q = GameType::TInf;

constexpr std::array<TypeEquation, 18> kForbidden{{
    {O, P, N, "opn"}, {N, P, P, "npp"}, {O, O, P, "oop"}, {P, P, O, "ppo"}, {O, N, O, "ono"},
    {P, P, N, "ppn"}, {O, P, P, "opp"}, {N, P, O, "npo"}, {N, N, P, "nnp"}, {Q, P, N, "qpn"},
    {Q, P, P, "qpp"}, {Q, O, P, "qop"}, {Q, P, O, "qpo"}, {Q, N, O, "qno"}, {Q, N, P, "qnp"},
    {Q, Q, N, "qqn"}, {Q, Q, P, "qqp"}, {O, O, O, "ooo"},
}};

constexpr std::array<SumExample, 22> kExamples{{
    {{P, P, P, "P+P=P"}, "0", "0"},
    {{N, P, N, "N+P=N"}, "1", "0"},
    {{N, N, O, "N+N=O"}, "1", "1"},
    {{O, P, O, "O+P=O"}, "11", "0"},
    {{O, N, P, "O+N=P"}, "11", "1"},
    {{O, O, N, "O+O=N"}, "11", "11"},
    {{Q, P, Q, "Q+P=Q"}, "12", "0"},
    {{Q, N, Q, "Q+N=Q"}, "12", "2"},
    {{Q, O, Q, "Q+O=Q"}, "22", "11"},
    {{Q, Q, Q, "Q+Q=Q"}, "12", "12"},
    {{N, N, Q, "N+N=Q"}, "2", "2"},
    {{P, P, Q, "P+P=Q"}, "{{2}}", "{{2}}"},
    {{N, P, Q, "N+P=Q"}, "1111", "{{2}}"},
    {{O, P, Q, "O+P=Q"}, "{2}", "111"},
    {{O, N, Q, "O+N=Q"}, "1", "{2}"},
    {{O, O, Q, "O+O=Q"}, "{2}", "{2}"},
    {{N, N, N, "N+N=N"}, "112", "1"},
    {{N, O, N, "N+O=N"}, "2", "11"},
    {{Q, N, N, "Q+N=N"}, "12", "1"},
    {{Q, O, N, "Q+O=N"}, "12", "11"},
    {{Q, O, O, "Q+O=O"}, "{2,11}", "11"},
    {{Q, Q, O, "Q+Q=O"}, "{1,11}", "{1,11}"},
}};

constexpr SignatureGrid kOnes{{
    {N, O, P, N, O, P, N, O, P, N, O},
    {Q, Q, N, O, P, N, O, P, N, O, P},
    {N, Q, Q, Q, N, O, P, N, O, P, N},
    {N, Q, Q, Q, Q, Q, N, O, P, N, O},
    {Q, Q, Q, Q, Q, Q, Q, Q, N, O, P},
    {N, Q, Q, Q, Q, Q, Q, Q, Q, Q, N},
}};

constexpr SignatureGrid kOnesTwo{{
    {Q, Q, N, Q, N, N, Q, N, N, Q, N},
    {Q, Q, Q, Q, N, Q, N, N, Q, N, N},
    {Q, Q, Q, Q, Q, Q, N, Q, N, N, Q},
    {Q, Q, Q, Q, Q, Q, Q, Q, N, Q, N},
    {Q, Q, Q, Q, Q, Q, Q, Q, Q, Q, N},
    {Q, Q, Q, Q, Q, Q, Q, Q, Q, Q, Q},
}};

}  // namespace

std::string TypeEquation::text() const {
  return std::string(type_letter(left)) + "+" + std::string(type_letter(right)) + "=" +
         std::string(type_letter(sum));
}

std::span<const TypeEquation> forbidden_equations() { return kForbidden; }

std::span<const SumExample> known_sum_examples() { return kExamples; }

TypeTable known_addition_table() {
  TypeTable t(TableKind::addition());
  t.at(P, P) = {P, Q};
  t.at(P, N) = {N, Q};
  t.at(P, O) = {O, Q};
  t.at(P, Q) = {Q};
  t.at(N, P) = {N, Q};
  t.at(N, N) = {N, O, Q};
  t.at(N, O) = {P, N, Q};
  t.at(N, Q) = {N, Q};
  t.at(O, P) = {O, Q};
  t.at(O, N) = {P, N, Q};
  t.at(O, O) = {N, Q};
  t.at(O, Q) = {N, O, Q};
  t.at(Q, P) = {Q};
  t.at(Q, N) = {N, Q};
  t.at(Q, O) = {N, O, Q};
  t.at(Q, Q) = {O, Q};
  return t;
}

TypeTable known_subtraction_table() {
  TypeTable t(TableKind::subtraction());
  t.at(P, P) = {P};
  t.at(P, N) = {O};
  t.at(P, O) = {N};
  t.at(P, Q) = {};
  t.at(O, P) = {O};
  t.at(O, N) = {N};
  t.at(O, O) = {P, Q};
  t.at(O, Q) = {O, Q};
  t.at(N, P) = {N};
  t.at(N, N) = TypeSet::all();
  t.at(N, O) = {N, O, Q};
  t.at(N, Q) = {N, O};
  for (GameType c : kAllTypes) t.at(Q, c) = TypeSet::all();
  return t;
}

TypeTable known_doubling_table() {
  TypeTable t(TableKind::doubling());
  t.at(P) = {P, Q};
  t.at(N) = {O, Q};
  t.at(O) = {N, Q};
  t.at(Q) = {O, Q};
  return t;
}

TypeTable known_trebling_table() {
  TypeTable t(TableKind::trebling());
  t.at(P) = {P, Q};
  t.at(N) = {P, Q};
  t.at(O) = {P, Q};
  t.at(Q) = {Q};
  return t;
}

const SignatureGrid& known_signature_table(bool with_two) { return with_two ? kOnesTwo : kOnes; }

}  // namespace tricgt
