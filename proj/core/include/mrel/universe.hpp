#ifndef MREL_UNIVERSE_HPP
#define MREL_UNIVERSE_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace mrel {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An ordered finite carrier set of named elements.
///
/// The element order is fixed at construction and defines the canonical
/// index used by ElementSet and Multirelation. Copies are cheap (shared
/// immutable state). Operation costs scale with 2^size, so construction
/// rejects universes above a cap (16 elements unless overridden).
class Universe {
  public:
    static constexpr std::size_t kDefaultElementCap = 16;
    static constexpr std::size_t kHardElementCap = 24;

    explicit Universe(std::vector<std::string> elements,
                      std::size_t element_cap = kDefaultElementCap);

    std::size_t size() const { return data_->names.size(); }
    const std::string& name(std::size_t index) const { return data_->names.at(index); }
    const std::vector<std::string>& names() const { return data_->names; }

    /// Index of a named element; throws Error if unknown.
    std::size_t index_of(const std::string& name) const;
    bool contains(const std::string& name) const;

    /// Mask with one bit per element (all-ones of width size()).
    std::uint32_t full_mask() const { return data_->full_mask; }

    bool operator==(const Universe& other) const;
    bool operator!=(const Universe& other) const { return !(*this == other); }

    /// True if both universes have identical element lists.
    static bool same(const Universe& a, const Universe& b) { return a == b; }

  private:
    struct Data {
        std::vector<std::string> names;
        std::uint32_t full_mask = 0;
    };
    std::shared_ptr<const Data> data_;
};

/// Throws Error unless a and b agree; used as the precondition check of
/// every binary multirelation operation.
void require_same_universe(const Universe& a, const Universe& b, const char* op);

/// A subset of a universe, with canonical bitset semantics.
class ElementSet {
  public:
    explicit ElementSet(Universe universe, std::uint32_t bits = 0);
    ElementSet(Universe universe, const std::vector<std::string>& members);

    const Universe& universe() const { return universe_; }
    std::uint32_t bits() const { return bits_; }

    bool empty() const { return bits_ == 0; }
    std::size_t size() const;
    bool contains(std::size_t index) const { return (bits_ >> index) & 1u; }

    /// Member names in universe order.
    std::vector<std::string> members() const;

    ElementSet operator|(const ElementSet& rhs) const;
    ElementSet operator&(const ElementSet& rhs) const;
    ElementSet operator-(const ElementSet& rhs) const;
    /// Complement within the universe.
    ElementSet complement() const;

    bool subseteq(const ElementSet& rhs) const;

    bool operator==(const ElementSet& rhs) const;
    bool operator!=(const ElementSet& rhs) const { return !(*this == rhs); }

    /// Renders as "{a, b}" ("{}" when empty), elements in universe order.
    std::string to_string() const;

  private:
    Universe universe_;
    std::uint32_t bits_;
};

}  // namespace mrel

#endif
