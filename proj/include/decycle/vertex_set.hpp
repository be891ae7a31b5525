#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "decycle/graph.hpp"

namespace decycle {

/// Subset of [0, universe_size) stored as a bit set.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe_size);
    VertexSet(int universe_size, std::span<const Vertex> members);
    VertexSet(int universe_size, std::initializer_list<Vertex> members);

    int universe_size() const noexcept { return universe_size_; }
    int size() const noexcept;
    bool empty() const noexcept { return size() == 0; }

    bool contains(Vertex v) const;
    /// Throws InvalidInput when v is outside the universe.
    void insert(Vertex v);
    void erase(Vertex v);

    /// Members in ascending order.
    std::vector<Vertex> members() const;

    bool is_subset_of(const VertexSet& other) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    int universe_size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace decycle
