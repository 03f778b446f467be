#include "ebraid/tl.hpp"

#include <numeric>
#include <sstream>

namespace ebraid {

namespace {

/// Plain array union-find; small and allocation-light.
class UnionFind {
  public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }

  private:
    std::vector<int> parent_;
};

// Boundary position of point p when walking around the disk:
// bottom 0..n-1 left to right, then top n-1..0 right to left.
int disk_position(int p, int n) { return p < n ? p : 3 * n - 1 - p; }

}  // namespace

PlanarMatching::PlanarMatching(int n, std::vector<int> pairing) : n_(n), pair_(std::move(pairing)) {
    if (n_ < 0 || pair_.size() != static_cast<std::size_t>(2 * n_))
        throw IndexOutOfRange("matching must cover exactly 2n boundary points");
    for (int p = 0; p < 2 * n_; ++p) {
        int q = pair_[static_cast<std::size_t>(p)];
        if (q < 0 || q >= 2 * n_ || q == p || pair_[static_cast<std::size_t>(q)] != p)
            throw IndexOutOfRange("pairing is not a perfect matching");
    }
    // Planarity: no two chords may interleave in the disk boundary order.
    for (int p = 0; p < 2 * n_; ++p) {
        int q = pair_[static_cast<std::size_t>(p)];
        if (q < p) continue;
        int a = disk_position(p, n_), b = disk_position(q, n_);
        if (a > b) std::swap(a, b);
        for (int r = 0; r < 2 * n_; ++r) {
            int s = pair_[static_cast<std::size_t>(r)];
            if (s < r) continue;
            int c = disk_position(r, n_), d = disk_position(s, n_);
            if (c > d) std::swap(c, d);
            bool c_inside = (a < c && c < b), d_inside = (a < d && d < b);
            if (c_inside != d_inside) throw IndexOutOfRange("pairing is not planar");
        }
    }
}

PlanarMatching PlanarMatching::identity(int n) {
    std::vector<int> pairing(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        pairing[static_cast<std::size_t>(i)] = n + i;
        pairing[static_cast<std::size_t>(n + i)] = i;
    }
    return PlanarMatching(n, std::move(pairing));
}

PlanarMatching PlanarMatching::generator(int n, int i) {
    if (i < 1 || i > n - 1)
        throw IndexOutOfRange("E_" + std::to_string(i) + " does not exist in TL_" + std::to_string(n));
    PlanarMatching id = identity(n);
    std::vector<int> pairing(static_cast<std::size_t>(2 * n));
    for (int p = 0; p < 2 * n; ++p) pairing[static_cast<std::size_t>(p)] = id.partner(p);
    auto link = [&pairing](int a, int b) {
        pairing[static_cast<std::size_t>(a)] = b;
        pairing[static_cast<std::size_t>(b)] = a;
    };
    link(i - 1, i);
    link(n + i - 1, n + i);
    return PlanarMatching(n, std::move(pairing));
}

std::string PlanarMatching::to_text() const {
    std::ostringstream out;
    auto name = [this](int p) {
        return (p < n_ ? "b" + std::to_string(p + 1) : "t" + std::to_string(p - n_ + 1));
    };
    bool first = true;
    for (int p = 0; p < 2 * n_; ++p) {
        if (partner(p) < p) continue;
        if (!first) out << ' ';
        first = false;
        out << name(p) << "-" << name(partner(p));
    }
    return out.str();
}

std::pair<int, PlanarMatching> tl_multiply(const PlanarMatching& a, const PlanarMatching& b) {
    if (a.strands() != b.strands()) throw LengthMismatch("TL product needs equal strand counts");
    int n = a.strands();
    // Point layout in the stacked diagram:
    //   0..n-1        bottom of a  (outer bottom)
    //   n..2n-1       top of a = bottom of b (middle, glued)
    //   2n..3n-1      top of b     (outer top)
    UnionFind uf(3 * n);
    for (int p = 0; p < 2 * n; ++p) uf.unite(p, a.partner(p));
    for (int p = 0; p < 2 * n; ++p) {
        int q = b.partner(p);
        uf.unite(p < n ? n + p : n + p, q < n ? n + q : n + q);
    }

    // Outer points: 0..n-1 and 2n..3n-1. Each connected component contains
    // either two outer points (a strand of the product) or none (a closed loop).
    std::map<int, std::vector<int>> groups;
    for (int p = 0; p < 3 * n; ++p) groups[uf.find(p)].push_back(p);

    std::vector<int> pairing(static_cast<std::size_t>(2 * n), -1);
    auto outer_index = [n](int p) { return p < n ? p : p - n; };  // 2n+i -> n+i
    int loops = 0;
    for (const auto& [root, members] : groups) {
        std::vector<int> outer;
        for (int p : members)
            if (p < n || p >= 2 * n) outer.push_back(p);
        if (outer.empty()) {
            ++loops;
        } else {
            int x = outer_index(outer[0]);
            int y = outer_index(outer[1]);
            pairing[static_cast<std::size_t>(x)] = y;
            pairing[static_cast<std::size_t>(y)] = x;
        }
    }
    return {loops, PlanarMatching(n, std::move(pairing))};
}

int closure_loop_count(const PlanarMatching& a) {
    int n = a.strands();
    UnionFind uf(2 * n);
    for (int p = 0; p < 2 * n; ++p) uf.unite(p, a.partner(p));
    for (int i = 0; i < n; ++i) uf.unite(i, n + i);
    std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
    int loops = 0;
    for (int p = 0; p < 2 * n; ++p) {
        int r = uf.find(p);
        if (!seen[static_cast<std::size_t>(r)]) {
            seen[static_cast<std::size_t>(r)] = 1;
            ++loops;
        }
    }
    return loops;
}

TLElement TLElement::unit(int n) {
    TLElement e(n);
    e.add_term(PlanarMatching::identity(n), TauLaurent::one());
    return e;
}

void TLElement::add_term(const PlanarMatching& m, const TauLaurent& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TLElement& TLElement::operator+=(const TLElement& o) {
    if (n_ != o.n_) throw LengthMismatch("TL sum needs equal strand counts");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TLElement operator*(const TLElement& a, const TLElement& b) {
    if (a.n_ != b.n_) throw LengthMismatch("TL product needs equal strand counts");
    static const TauLaurent d = TauLaurent::circle_value();
    TLElement r(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            auto [loops, m] = tl_multiply(ma, mb);
            TauLaurent c = ca * cb;
            for (int l = 0; l < loops; ++l) c = c * d;
            r.add_term(m, c);
        }
    }
    return r;
}

TLElement operator*(const TauLaurent& c, TLElement x) {
    TLElement r(x.strands());
    for (const auto& [m, coeff] : x.terms_) r.add_term(m, c * coeff);
    return r;
}

TLElement rho_sigma(int n, int i, bool inverse) {
    TLElement r(n);
    PlanarMatching e = PlanarMatching::generator(n, i);  // validates i
    if (!inverse) {
        r.add_term(PlanarMatching::identity(n), TauLaurent::monomial(1, 0));
        r.add_term(e, TauLaurent::monomial(0, 1, -1));
    } else {
        r.add_term(PlanarMatching::identity(n), TauLaurent::monomial(3, 0));
        r.add_term(e, TauLaurent::monomial(0, -1, -1));
    }
    return r;
}

TLElement rho_image(const BraidWord& b) {
    TLElement r = TLElement::unit(b.strands);
    for (int l : b.letters) r = r * rho_sigma(b.strands, l > 0 ? l : -l, l < 0);
    return r;
}

TauLaurent tl_closure_eval(const TLElement& x) {
    static const TauLaurent d = TauLaurent::circle_value();
    TauLaurent r;
    for (const auto& [m, c] : x.terms()) {
        TauLaurent v = c;
        int loops = closure_loop_count(m);
        for (int l = 0; l < loops; ++l) v = v * d;
        r += v;
    }
    return r;
}

}  // namespace ebraid
