#include "quadcert/ring.hpp"

#include <algorithm>
#include <set>

#include "quadcert/errors.hpp"

namespace quadcert {

std::string MonomialOrder::to_string() const {
    switch (kind) {
        case OrderKind::Grevlex: return "grevlex";
        case OrderKind::Lex: return "lex";
        case OrderKind::Elim: return "elim" + std::to_string(elim_tail);
    }
    return "?";
}

std::optional<MonomialOrder> MonomialOrder::from_string(const std::string& s) {
    if (s == "grevlex") return grevlex();
    if (s == "lex") return lex();
    if (s.rfind("elim", 0) == 0) {
        try {
            std::size_t tail = std::stoul(s.substr(4));
            return elim(tail);
        } catch (...) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

long total_degree(const ExpVec& e) {
    long d = 0;
    for (auto x : e) d += x;
    return d;
}

namespace {

int compare_grevlex_range(const ExpVec& a, const ExpVec& b, std::size_t lo, std::size_t hi) {
    long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    // Equal degree: the one with the smaller last nonzero difference wins.
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

int compare_lex_range(const ExpVec& a, const ExpVec& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int compare_monomials(const MonomialOrder& order, const ExpVec& a, const ExpVec& b) {
    const std::size_t n = a.size();
    switch (order.kind) {
        case OrderKind::Grevlex: return compare_grevlex_range(a, b, 0, n);
        case OrderKind::Lex: return compare_lex_range(a, b, 0, n);
        case OrderKind::Elim: {
            const std::size_t split = n >= order.elim_tail ? n - order.elim_tail : 0;
            if (int c = compare_grevlex_range(a, b, split, n)) return c;
            return compare_grevlex_range(a, b, 0, split);
        }
    }
    return 0;
}

RingDescriptor RingDescriptor::make(CoefficientField field, std::vector<std::string> vars,
                                    MonomialOrder order) {
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw Error("empty variable name");
        if (!seen.insert(v).second) throw NameClashError("duplicate variable name: " + v);
    }
    auto d = std::make_shared<Data>();
    d->field = field;
    d->vars = std::move(vars);
    d->order = order;
    return RingDescriptor(std::move(d));
}

std::optional<std::size_t> RingDescriptor::index_of(const std::string& name) const {
    const auto& vs = data_->vars;
    auto it = std::find(vs.begin(), vs.end(), name);
    if (it == vs.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vs.begin());
}

RingDescriptor RingDescriptor::extended(const std::vector<std::string>& new_vars) const {
    std::vector<std::string> vs = data_->vars;
    for (const auto& v : new_vars) {
        if (has_var(v) || std::count(new_vars.begin(), new_vars.end(), v) > 1)
            throw NameClashError("variable already present: " + v);
        vs.push_back(v);
    }
    return make(data_->field, std::move(vs), data_->order);
}

RingDescriptor RingDescriptor::removed(const std::string& name) const {
    auto idx = index_of(name);
    if (!idx) throw Error("no such variable: " + name);
    std::vector<std::string> vs = data_->vars;
    vs.erase(vs.begin() + static_cast<long>(*idx));
    return make(data_->field, std::move(vs), data_->order);
}

RingDescriptor RingDescriptor::with_order(MonomialOrder order) const {
    return make(data_->field, data_->vars, order);
}

std::string RingDescriptor::fresh_name(const std::string& base) const {
    if (!has_var(base)) return base;
    for (int k = 2;; ++k) {
        std::string cand = base + std::to_string(k);
        if (!has_var(cand)) return cand;
    }
}

bool RingDescriptor::operator==(const RingDescriptor& o) const {
    if (data_ == o.data_) return true;
    if (!data_ || !o.data_) return false;
    return data_->field == o.data_->field && data_->vars == o.data_->vars &&
           data_->order == o.data_->order;
}

std::string RingDescriptor::to_string() const {
    std::string s = data_->field.to_string() + "[";
    for (std::size_t i = 0; i < data_->vars.size(); ++i) {
        if (i) s += ",";
        s += data_->vars[i];
    }
    s += "]";
    return s;
}

}  // namespace quadcert
