#include "mrel/universe.hpp"

#include <algorithm>
#include <cctype>

namespace mrel {

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

Universe::Universe(std::vector<std::string> elements, std::size_t element_cap) {
    if (element_cap > kHardElementCap) element_cap = kHardElementCap;
    if (elements.size() > element_cap) {
        throw Error("universe has " + std::to_string(elements.size()) +
                    " elements, cap is " + std::to_string(element_cap));
    }
    for (const auto& name : elements) {
        if (!is_identifier(name)) {
            throw Error("universe element '" + name + "' is not an identifier");
        }
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = i + 1; j < elements.size(); ++j) {
            if (elements[i] == elements[j]) {
                throw Error("duplicate universe element '" + elements[i] + "'");
            }
        }
    }
    auto data = std::make_shared<Data>();
    data->full_mask = elements.empty()
        ? 0u
        : (elements.size() >= 32 ? ~0u : ((1u << elements.size()) - 1u));
    data->names = std::move(elements);
    data_ = std::move(data);
}

std::size_t Universe::index_of(const std::string& name) const {
    const auto& names = data_->names;
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw Error("unknown universe element '" + name + "'");
    return static_cast<std::size_t>(it - names.begin());
}

bool Universe::contains(const std::string& name) const {
    const auto& names = data_->names;
    return std::find(names.begin(), names.end(), name) != names.end();
}

bool Universe::operator==(const Universe& other) const {
    return data_ == other.data_ || data_->names == other.data_->names;
}

void require_same_universe(const Universe& a, const Universe& b, const char* op) {
    if (a != b) throw Error(std::string(op) + ": universe mismatch");
}

ElementSet::ElementSet(Universe universe, std::uint32_t bits)
    : universe_(std::move(universe)), bits_(bits) {
    if (bits_ & ~universe_.full_mask()) {
        throw Error("element set bits outside universe");
    }
}

ElementSet::ElementSet(Universe universe, const std::vector<std::string>& members)
    : universe_(std::move(universe)), bits_(0) {
    for (const auto& m : members) bits_ |= 1u << universe_.index_of(m);
}

std::size_t ElementSet::size() const {
    return static_cast<std::size_t>(__builtin_popcount(bits_));
}

std::vector<std::string> ElementSet::members() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < universe_.size(); ++i) {
        if (contains(i)) out.push_back(universe_.name(i));
    }
    return out;
}

ElementSet ElementSet::operator|(const ElementSet& rhs) const {
    require_same_universe(universe_, rhs.universe_, "set union");
    return ElementSet(universe_, bits_ | rhs.bits_);
}

ElementSet ElementSet::operator&(const ElementSet& rhs) const {
    require_same_universe(universe_, rhs.universe_, "set intersection");
    return ElementSet(universe_, bits_ & rhs.bits_);
}

ElementSet ElementSet::operator-(const ElementSet& rhs) const {
    require_same_universe(universe_, rhs.universe_, "set difference");
    return ElementSet(universe_, bits_ & ~rhs.bits_);
}

ElementSet ElementSet::complement() const {
    return ElementSet(universe_, ~bits_ & universe_.full_mask());
}

bool ElementSet::subseteq(const ElementSet& rhs) const {
    require_same_universe(universe_, rhs.universe_, "set inclusion");
    return (bits_ & ~rhs.bits_) == 0;
}

bool ElementSet::operator==(const ElementSet& rhs) const {
    return universe_ == rhs.universe_ && bits_ == rhs.bits_;
}

std::string ElementSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < universe_.size(); ++i) {
        if (!contains(i)) continue;
        if (!first) out += ", ";
        out += universe_.name(i);
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace mrel
