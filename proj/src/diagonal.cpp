#include "enritch/diagonal.hpp"

namespace enritch {

bool LawvereDiagonals::is_diagonal(const ExtRat& p, const ExtRat& q, const ExtRat& u) const {
  const bool law = u.monus(p) + p == u && q + u.monus(q) == u;
  const bool below_meet = u >= p && u >= q;
  if (law != below_meet) {
    throw LawViolation("diagonal law and u <= p meet q disagree at " + u.str() + ": " + p.str() + " -> " + q.str());
  }
  return law;
}

ExtRat LawvereDiagonals::left_residual(const ExtRat& w, const ExtRat& u, const ExtRat& q, const ExtRat& r) const {
  return Lawvere::meet(Lawvere::meet(q, r), q + w.monus(u));
}

ExtRat LawvereDiagonals::right_residual(const ExtRat& v, const ExtRat& w, const ExtRat& p, const ExtRat& q) const {
  return Lawvere::meet(Lawvere::meet(p, q), w.monus(v.monus(q)));
}

FiniteDiagonals::FiniteDiagonals(std::shared_ptr<const FiniteQuantale> q) : q_(std::move(q)) {
  const std::size_t n = q_->size();
  is_object_.assign(n, false);
  for (Elem a : q_->elements()) {
    if (q_->involve(a) == a) {
      objects_.push_back(a);
      is_object_[a.index] = true;
    }
  }
  homs_.resize(n * n);
  tops_.assign(n * n, q_->bottom());
  for (Elem p : objects_) {
    for (Elem t : objects_) {
      auto& hom = homs_[pair(p, t)];
      for (Elem u : q_->elements()) {
        if (is_diagonal(p, t, u)) hom.push_back(u);
      }
      tops_[pair(p, t)] = q_->join(hom);
    }
  }
}

bool FiniteDiagonals::is_diagonal(Elem p, Elem q, Elem u) const {
  const bool law = q_->tensor(q_->left_residual(u, p), p) == u && q_->tensor(q, q_->right_residual(q, u)) == u;
  if (q_->is_divisible() && law != q_->leq(u, q_->meet(p, q))) {
    throw LawViolation("diagonal law and u <= p meet q disagree for a divisible quantale");
  }
  return law;
}

Elem FiniteDiagonals::meet(Elem p, Elem q, Elem a, Elem b) const {
  Elem out = q_->bottom();
  for (Elem u : hom(p, q)) {
    if (q_->leq(u, a) && q_->leq(u, b)) out = q_->join(out, u);
  }
  return out;
}

Elem FiniteDiagonals::left_residual(Elem w, Elem u, Elem q, Elem r) const {
  Elem out = q_->bottom();
  for (Elem v : hom(q, r)) {
    if (q_->leq(compose(v, q, u), w)) out = q_->join(out, v);
  }
  return out;
}

Elem FiniteDiagonals::right_residual(Elem v, Elem w, Elem p, Elem q) const {
  Elem out = q_->bottom();
  for (Elem u : hom(p, q)) {
    if (q_->leq(compose(v, q, u), w)) out = q_->join(out, u);
  }
  return out;
}

}  // namespace enritch
