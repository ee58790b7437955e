#pragma once

#include <vector>

namespace qmarg {

// Permutation of {0..n-1} stored as an image list: i -> images[i].
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);
    // cycle(n, {a,b,c}) maps a->b, b->c, c->a; other points fixed.
    static Permutation cycle(int n, const std::vector<int>& cyc);
    static std::vector<Permutation> all(int n);  // lexicographic by image list

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    // (p.compose(q))(i) = p(q(i)): apply q first.
    Permutation compose(const Permutation& q) const;
    Permutation inverse() const;

    int num_cycles() const;
    std::vector<int> cycle_type() const;  // cycle lengths, descending
    int sign() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }

private:
    std::vector<int> images_;
};

}  // namespace qmarg
