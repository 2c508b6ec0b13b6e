#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace partsched {

using ProcessorId = int;

/// Subset of the processors [1, p]. Processor ids are 1-based.
class ProcessorSet {
public:
    ProcessorSet() = default;
    explicit ProcessorSet(std::size_t processor_count) : bits_(processor_count) {}

    static ProcessorSet of(std::size_t processor_count, std::span<const ProcessorId> members);
    static ProcessorSet of(std::size_t processor_count, std::initializer_list<ProcessorId> members) {
        return of(processor_count, std::span<const ProcessorId>(members.begin(), members.size()));
    }
    /// The whole range [1, processor_count].
    static ProcessorSet all(std::size_t processor_count);
    /// Contiguous [first, last].
    static ProcessorSet range(std::size_t processor_count, ProcessorId first, ProcessorId last);

    std::size_t processor_count() const { return bits_.size(); }
    std::size_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool contains(ProcessorId id) const;
    void insert(ProcessorId id);

    bool intersects(const ProcessorSet& other) const { return bits_.intersects(other.bits_); }
    ProcessorSet& operator|=(const ProcessorSet& other);
    ProcessorSet operator&(const ProcessorSet& other) const;

    std::vector<ProcessorId> members() const;
    std::string to_string() const;

    friend bool operator==(const ProcessorSet&, const ProcessorSet&) = default;

private:
    boost::dynamic_bitset<std::uint64_t> bits_;
};

} // namespace partsched
