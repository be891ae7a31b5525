#include "decycle/vertex_set.hpp"

#include <bit>
#include <string>

#include "decycle/errors.hpp"

namespace decycle {

namespace {
constexpr int kWordBits = 64;
}

VertexSet::VertexSet(int universe_size)
    : universe_size_(universe_size), words_(static_cast<std::size_t>((universe_size + kWordBits - 1) / kWordBits), 0) {
    if (universe_size < 0)
        throw InvalidInput("negative universe size");
}

VertexSet::VertexSet(int universe_size, std::span<const Vertex> members) : VertexSet(universe_size) {
    for (Vertex v : members)
        insert(v);
}

VertexSet::VertexSet(int universe_size, std::initializer_list<Vertex> members)
    : VertexSet(universe_size, std::span<const Vertex>(members.begin(), members.size())) {}

int VertexSet::size() const noexcept {
    int total = 0;
    for (auto w : words_)
        total += std::popcount(w);
    return total;
}

bool VertexSet::contains(Vertex v) const {
    if (v < 0 || v >= universe_size_)
        return false;
    return (words_[static_cast<std::size_t>(v / kWordBits)] >> (v % kWordBits)) & 1U;
}

void VertexSet::insert(Vertex v) {
    if (v < 0 || v >= universe_size_)
        throw InvalidInput("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_size_));
    words_[static_cast<std::size_t>(v / kWordBits)] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
    if (v < 0 || v >= universe_size_)
        return;
    words_[static_cast<std::size_t>(v / kWordBits)] &= ~(std::uint64_t{1} << (v % kWordBits));
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto w = words_[i];
        while (w) {
            int bit = std::countr_zero(w);
            out.push_back(static_cast<Vertex>(i) * kWordBits + bit);
            w &= w - 1;
        }
    }
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    if (universe_size_ != other.universe_size_)
        return false;
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

}  // namespace decycle
