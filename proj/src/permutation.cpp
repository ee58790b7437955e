#include "qmarg/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qmarg {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Permutation: image list is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(a)],
              p.images_[static_cast<std::size_t>(b)]);
    return p;
}

Permutation Permutation::cycle(int n, const std::vector<int>& cyc) {
    Permutation p = identity(n);
    for (std::size_t i = 0; i < cyc.size(); ++i)
        p.images_[static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
    return Permutation(p.images_);  // revalidate
}

std::vector<Permutation> Permutation::all(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

Permutation Permutation::compose(const Permutation& q) const {
    if (size() != q.size())
        throw std::invalid_argument("Permutation::compose: size mismatch");
    std::vector<int> im(static_cast<std::size_t>(size()));
    for (int i = 0; i < size(); ++i)
        im[static_cast<std::size_t>(i)] = (*this)(q(i));
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(static_cast<std::size_t>(size()));
    for (int i = 0; i < size(); ++i)
        im[static_cast<std::size_t>((*this)(i))] = i;
    return Permutation(std::move(im));
}

int Permutation::num_cycles() const {
    return static_cast<int>(cycle_type().size());
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<bool> seen(static_cast<std::size_t>(size()), false);
    std::vector<int> lengths;
    for (int i = 0; i < size(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0, j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            j = (*this)(j);
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

int Permutation::sign() const {
    int s = 1;
    for (int len : cycle_type())
        if (len % 2 == 0) s = -s;
    return s;
}

}  // namespace qmarg
