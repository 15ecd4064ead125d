#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace hawkes {

// The M x M nonnegative matrix of kernel L1 masses. entries(source, target) is
// the expected number of type-`target` children of a type-`source` individual;
// every bound in this library depends on the model only through this matrix.
class InteractionMatrix {
  public:
    explicit InteractionMatrix(std::size_t m)
        : m_(m), a_(m * m, 0.0) {
        if (m == 0) throw std::invalid_argument("matrix dimension must be >= 1");
    }

    InteractionMatrix(std::initializer_list<std::initializer_list<double>> rows)
        : InteractionMatrix(rows.size()) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != m_)
                throw std::invalid_argument("interaction matrix must be square");
            std::size_t j = 0;
            for (double v : row) a_[i * m_ + j++] = v;
            ++i;
        }
        validate();
    }

    static InteractionMatrix zero(std::size_t m) { return InteractionMatrix(m); }

    std::size_t size() const { return m_; }

    double& operator()(std::size_t source, std::size_t target) {
        return a_[source * m_ + target];
    }
    double operator()(std::size_t source, std::size_t target) const {
        return a_[source * m_ + target];
    }

    // H * v
    std::vector<double> apply(const std::vector<double>& v) const {
        std::vector<double> out(m_, 0.0);
        for (std::size_t i = 0; i < m_; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < m_; ++j) s += a_[i * m_ + j] * v[j];
            out[i] = s;
        }
        return out;
    }

    InteractionMatrix multiply(const InteractionMatrix& other) const {
        if (other.m_ != m_) throw std::invalid_argument("dimension mismatch");
        InteractionMatrix out(m_);
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t k = 0; k < m_; ++k) {
                const double aik = a_[i * m_ + k];
                if (aik == 0.0) continue;
                for (std::size_t j = 0; j < m_; ++j)
                    out.a_[i * m_ + j] += aik * other.a_[k * m_ + j];
            }
        return out;
    }

    double row_sum(std::size_t i) const {
        double s = 0.0;
        for (std::size_t j = 0; j < m_; ++j) s += a_[i * m_ + j];
        return s;
    }

    double max_row_sum() const {
        double best = 0.0;
        for (std::size_t i = 0; i < m_; ++i) best = std::max(best, row_sum(i));
        return best;
    }

    double max_diagonal() const {
        double best = 0.0;
        for (std::size_t i = 0; i < m_; ++i) best = std::max(best, a_[i * m_ + i]);
        return best;
    }

    bool is_zero() const {
        for (double v : a_)
            if (v != 0.0) return false;
        return true;
    }

    void scale(double s) {
        for (double& v : a_) v *= s;
    }

    void validate() const {
        for (double v : a_)
            if (!(v >= 0.0) || !std::isfinite(v))
                throw std::invalid_argument(
                    "interaction matrix entries must be finite and nonnegative");
    }

    bool operator==(const InteractionMatrix& other) const {
        return m_ == other.m_ && a_ == other.a_;
    }

  private:
    std::size_t m_;
    std::vector<double> a_;  // row-major
};

}  // namespace hawkes
