#pragma once

#include <boost/rational.hpp>
#include <string>

#include "ssig/arcs.hpp"
#include "ssig/graph.hpp"

namespace ssig {

using Rational = boost::rational<long long>;

/// Result of a closed-form predictor. Evaluation is exact; intermediate
/// halves (the 5*m1/2 term, for instance) must not be rounded away before
/// they cancel, so values stay rational until read out.
struct FormulaResult {
  std::string name;
  bool applicable = false;
  Rational value{0};

  bool integral() const { return applicable && value.denominator() == 1; }
  /// Throws std::logic_error when not applicable or not an integer.
  long long as_integer() const;
};

/// Order of A1(G): 2m - m1 with m1 the pendant-edge count.
/// Applicable to connected hosts with n >= 3.
FormulaResult predict_order_a1(const Graph& g);

/// Size of A1(G): (1/2) sum over internal vertices of (2*d_i - m_i)^2
/// - 3m + 5*m1/2. Applicable to connected hosts with n >= 3.
FormulaResult predict_size_a1(const Graph& g);

/// Degree of the vertex uv of A1(G). Both endpoints internal:
/// 2(deg u + deg v - 2) - (m_u + m_v) + 1; pendant u: 2(deg v - 1) - m_v.
/// m_u / m_v count pendant neighbours excluding the other endpoint.
/// Throws std::invalid_argument when the arc is not a vertex of A1.
FormulaResult predict_degree_a1(const Graph& g, const Arc& a);

/// Named restrictions of the A2 order formula. Every variant evaluates the
/// same sum; the variant only narrows applicability for reporting.
enum class OrderA2Variant { General, C3Free, C3FreeNoPendant, MinDegreeAbove2 };

/// Order of A2(G): sum over internal vertices of
/// n_i*ideg(u_i) + 2*C(ideg(u_i),2) - 2*k_i - p_i.
/// Applicable to connected hosts (plus the variant's extra conditions).
FormulaResult predict_order_a2(const Graph& g, OrderA2Variant variant = OrderA2Variant::General);

/// Number of 3-vertex paths: sum of C(deg v, 2).
FormulaResult predict_p3_count(const Graph& g);

/// Degree of A1 of a k-regular host: 4k - 3. Throws std::invalid_argument
/// when k <= 1.
long long predict_regular_degree_a1(int k);

/// Smallest s beyond which A_s of any connected n-vertex host is complete:
/// floor(n / 2). Throws std::invalid_argument when n < 2.
int completeness_threshold(int n);

}  // namespace ssig
