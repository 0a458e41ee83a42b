#include "kptau/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace kptau {

Partition::Partition(std::vector<int> p) : parts(std::move(p))
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts[i] > parts[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

int Partition::weight() const
{
    int w = 0;
    for (int p : parts) {
        w += p;
    }
    return w;
}

int Partition::part(int a) const
{
    if (a < 1 || a > length()) {
        return 0;
    }
    return parts[static_cast<std::size_t>(a - 1)];
}

Partition Partition::conjugate() const
{
    if (parts.empty()) {
        return {};
    }
    std::vector<int> conj(static_cast<std::size_t>(parts[0]), 0);
    for (int p : parts) {
        for (int j = 0; j < p; ++j) {
            ++conj[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(conj));
}

namespace {

void emit(int remaining, int max_part, std::vector<int>& acc,
          std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        emit(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int w)
{
    if (w < 0) {
        return {};
    }
    std::vector<Partition> out;
    std::vector<int> acc;
    emit(w, w, acc, out);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return a.parts < b.parts; });
    return out;
}

std::vector<Partition> partitions_up_to(int w)
{
    std::vector<Partition> out;
    for (int n = 0; n <= w; ++n) {
        auto pn = partitions_of(n);
        out.insert(out.end(), pn.begin(), pn.end());
    }
    return out;
}

}  // namespace kptau
