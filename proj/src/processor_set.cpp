#include "partsched/processor_set.hpp"

#include <stdexcept>

namespace partsched {

ProcessorSet ProcessorSet::of(std::size_t processor_count, std::span<const ProcessorId> members) {
    ProcessorSet s(processor_count);
    for (ProcessorId id : members) s.insert(id);
    return s;
}

ProcessorSet ProcessorSet::all(std::size_t processor_count) {
    ProcessorSet s(processor_count);
    s.bits_.set();
    return s;
}

ProcessorSet ProcessorSet::range(std::size_t processor_count, ProcessorId first, ProcessorId last) {
    ProcessorSet s(processor_count);
    for (ProcessorId id = first; id <= last; ++id) s.insert(id);
    return s;
}

bool ProcessorSet::contains(ProcessorId id) const {
    return id >= 1 && static_cast<std::size_t>(id) <= bits_.size() && bits_.test(id - 1);
}

void ProcessorSet::insert(ProcessorId id) {
    if (id < 1 || static_cast<std::size_t>(id) > bits_.size()) {
        throw std::out_of_range("processor id " + std::to_string(id) + " outside [1, " +
                                std::to_string(bits_.size()) + "]");
    }
    bits_.set(id - 1);
}

ProcessorSet& ProcessorSet::operator|=(const ProcessorSet& other) {
    if (other.bits_.size() != bits_.size()) throw std::invalid_argument("processor set size mismatch");
    bits_ |= other.bits_;
    return *this;
}

ProcessorSet ProcessorSet::operator&(const ProcessorSet& other) const {
    if (other.bits_.size() != bits_.size()) throw std::invalid_argument("processor set size mismatch");
    ProcessorSet s(*this);
    s.bits_ &= other.bits_;
    return s;
}

std::vector<ProcessorId> ProcessorSet::members() const {
    std::vector<ProcessorId> out;
    for (auto i = bits_.find_first(); i != decltype(bits_)::npos; i = bits_.find_next(i)) {
        out.push_back(static_cast<ProcessorId>(i + 1));
    }
    return out;
}

std::string ProcessorSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto id : members()) {
        if (!first) s += ",";
        s += std::to_string(id);
        first = false;
    }
    return s + "}";
}

} // namespace partsched
