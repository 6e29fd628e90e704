#ifndef ARRANGELAB_SERIES_HPP
#define ARRANGELAB_SERIES_HPP

#include <sstream>
#include <string>
#include <vector>

#include "arrangelab/errors.hpp"
#include "arrangelab/numeric.hpp"

namespace arrangelab {

/// Integer power series truncated at a fixed degree.  Multiplication and
/// inversion truncate; inversion requires constant term 1.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int truncation) : c_(truncation + 1, 0) {}

    static TruncatedSeries one(int truncation) {
        TruncatedSeries s(truncation);
        s.c_[0] = 1;
        return s;
    }

    int truncation() const { return static_cast<int>(c_.size()) - 1; }
    const Int& operator[](int k) const { return c_[k]; }
    void set(int k, Int v) { c_[k] = std::move(v); }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries out(std::min(a.truncation(), b.truncation()));
        for (int k = 0; k <= out.truncation(); ++k)
            out.c_[k] = a.c_[k] + b.c_[k];
        return out;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries out(std::min(a.truncation(), b.truncation()));
        for (int i = 0; i <= out.truncation(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (int j = 0; i + j <= out.truncation(); ++j)
                if (b.c_[j] != 0)
                    out.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return out;
    }

    TruncatedSeries& operator*=(const TruncatedSeries& b) { return *this = *this * b; }

    TruncatedSeries inverse() const {
        if (c_[0] != 1)
            throw Error("series inverse requires constant term 1");
        TruncatedSeries out(truncation());
        out.c_[0] = 1;
        for (int n = 1; n <= truncation(); ++n) {
            Int acc = 0;
            for (int k = 1; k <= n; ++k)
                acc += c_[k] * out.c_[n - k];
            out.c_[n] = -acc;
        }
        return out;
    }

    // t -> -t
    TruncatedSeries alternate() const {
        TruncatedSeries out(truncation());
        for (int k = 0; k <= truncation(); ++k)
            out.c_[k] = (k % 2 == 0) ? c_[k] : -c_[k];
        return out;
    }

    TruncatedSeries retruncate(int trunc) const {
        TruncatedSeries out(trunc);
        for (int k = 0; k <= trunc; ++k)
            out.c_[k] = k <= truncation() ? c_[k] : Int(0);
        return out;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

    std::string str() const {
        std::ostringstream out;
        bool any = false;
        for (int k = 0; k <= truncation(); ++k) {
            if (c_[k] == 0)
                continue;
            if (any)
                out << (c_[k] > 0 ? " + " : " - ");
            else if (c_[k] < 0)
                out << "-";
            Int a = c_[k] < 0 ? Int(-c_[k]) : c_[k];
            if (k == 0)
                out << a;
            else {
                if (a != 1)
                    out << a << "*";
                out << "t";
                if (k > 1)
                    out << "^" << k;
            }
            any = true;
        }
        if (!any)
            out << "0";
        return out.str();
    }

  private:
    std::vector<Int> c_;
};

// (1 - t^w)^(-mult), truncated.
inline TruncatedSeries geometric_factor(int w, const Int& mult, int trunc) {
    TruncatedSeries out(trunc);
    // coefficient of t^(w*k) is binom(mult - 1 + k, k)
    Int binom = 1;
    for (int k = 0; w * k <= trunc; ++k) {
        out.set(w * k, binom);
        binom = binom * (mult + k) / (k + 1);
    }
    return out;
}

// PBW product Prod_w (1 - t^w)^(-dims[w-1]).
inline TruncatedSeries pbw_series(const std::vector<Int>& dims, int trunc) {
    TruncatedSeries out = TruncatedSeries::one(trunc);
    for (int w = 1; w <= static_cast<int>(dims.size()) && w <= trunc; ++w)
        if (dims[w - 1] != 0)
            out *= geometric_factor(w, dims[w - 1], trunc);
    return out;
}

// Exponents l_w with h = Prod_w (1 - t^w)^(-l_w), recovered degree by degree.
inline std::vector<Int> pbw_exponents(const TruncatedSeries& h) {
    TruncatedSeries q = h;
    std::vector<Int> dims;
    for (int w = 1; w <= h.truncation(); ++w) {
        Int l = q[w];
        dims.push_back(l);
        if (l != 0) {
            // multiply by (1 - t^w)^l
            TruncatedSeries factor(h.truncation());
            Int binom = 1;
            int sign = 1;
            for (int k = 0; w * k <= h.truncation(); ++k) {
                factor.set(w * k, sign > 0 ? binom : Int(-binom));
                binom = binom * (l - k) / (k + 1);
                sign = -sign;
                if (binom == 0)
                    break;
            }
            q *= factor;
        }
    }
    return dims;
}

// Witt dimension of the weight-w piece of the free Lie algebra on n
// generators: (1/w) * sum over d | w of mu(d) * n^(w/d).
inline Int witt_dimension(int n_gens, int w) {
    auto mobius = [](int m) {
        int mu = 1;
        for (int p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                m /= p;
                if (m % p == 0)
                    return 0;
                mu = -mu;
            }
        }
        if (m > 1)
            mu = -mu;
        return mu;
    };
    Int total = 0;
    for (int d = 1; d <= w; ++d) {
        if (w % d != 0)
            continue;
        int mu = mobius(d);
        if (mu == 0)
            continue;
        Int pw = 1;
        for (int k = 0; k < w / d; ++k)
            pw *= n_gens;
        total += mu * pw;
    }
    return total / w;
}

} // namespace arrangelab

#endif
