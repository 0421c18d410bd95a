#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quadcert/field.hpp"

namespace quadcert {

using ExpVec = std::vector<int32_t>;

enum class OrderKind { Grevlex, Lex, Elim };

// Monomial order tag. Grevlex and Lex are global orders on all variables.
// Elim is a block order eliminating the last `elim_tail` variables: the tail
// block is compared (grevlex) first, so basis elements free of the tail
// variables generate the elimination ideal.
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    std::size_t elim_tail = 0;

    static MonomialOrder grevlex() { return {OrderKind::Grevlex, 0}; }
    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder elim(std::size_t tail) { return {OrderKind::Elim, tail}; }

    bool operator==(const MonomialOrder&) const = default;
    std::string to_string() const;
    static std::optional<MonomialOrder> from_string(const std::string& s);
};

// -1, 0, +1 as a precedes/equals/follows b in the order.
int compare_monomials(const MonomialOrder& order, const ExpVec& a, const ExpVec& b);

long total_degree(const ExpVec& e);

// Immutable descriptor of a polynomial ring: coefficient field, ordered
// variable names, and a default monomial order. Cheap to copy.
class RingDescriptor {
public:
    RingDescriptor() = default;

    static RingDescriptor make(CoefficientField field, std::vector<std::string> vars,
                               MonomialOrder order = MonomialOrder::grevlex());

    const CoefficientField& field() const { return data_->field; }
    const std::vector<std::string>& vars() const { return data_->vars; }
    const MonomialOrder& order() const { return data_->order; }
    std::size_t nvars() const { return data_->vars.size(); }

    std::optional<std::size_t> index_of(const std::string& name) const;
    bool has_var(const std::string& name) const { return index_of(name).has_value(); }

    // Appends variables; throws NameClashError on a duplicate.
    RingDescriptor extended(const std::vector<std::string>& new_vars) const;
    // Removes a variable (it must exist).
    RingDescriptor removed(const std::string& name) const;
    RingDescriptor with_order(MonomialOrder order) const;

    // First name of the form base, base2, base3, ... not already a variable.
    std::string fresh_name(const std::string& base) const;

    bool operator==(const RingDescriptor& o) const;
    bool operator!=(const RingDescriptor& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    struct Data {
        CoefficientField field = CoefficientField::rationals();
        std::vector<std::string> vars;
        MonomialOrder order;
    };
    explicit RingDescriptor(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;
};

}  // namespace quadcert
