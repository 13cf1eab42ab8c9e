// Copyright 2026 The pentasum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pentasum/quaternary.hpp"

#include <string>

namespace pentasum {

i64 QuaternaryWitness::w() const {
    const auto [p, q, r] = linear_weights(kind);
    const i128 s = static_cast<i128>(p) * x + static_cast<i128>(q) * y + static_cast<i128>(r) * z;
    if (kind == WitnessKind::half_sum) return narrow(-s / 2, "w");
    return narrow(-s, "w");
}

i128 QuaternaryWitness::value() const {
    const i128 xx = x, yy = y, zz = z;
    switch (kind) {
    case WitnessKind::half_sum: {
        const i128 s = xx + yy + zz;
        if (s % 2 != 0) return -1;
        return xx * xx + yy * yy + zz * zz + (s / 2) * (s / 2) * 2;
    }
    case WitnessKind::form_234: {
        const i128 s = 2 * xx + 3 * yy + 4 * zz;
        return 2 * xx * xx + 3 * yy * yy + 4 * zz * zz + s * s;
    }
    case WitnessKind::form_123: {
        const i128 s = xx + 2 * yy + 3 * zz;
        return xx * xx + 2 * yy * yy + 3 * zz * zz + s * s;
    }
    case WitnessKind::form_126: {
        const i128 s = xx + 2 * yy + 6 * zz;
        return xx * xx + 2 * yy * yy + 6 * zz * zz + s * s;
    }
    }
    return -1;
}

namespace {

QuaternaryWitness checked(QuaternaryWitness w) {
    if (!w.holds())
        throw Error(ErrorCode::identity_violation, std::string("quaternary ") + std::string(to_string(w.kind)) +
                                                       " identity failed for target " + std::to_string(w.target));
    return w;
}

void require_nonnegative(i64 q) {
    if (q < 0) throw Error(ErrorCode::domain, "transform input must be >= 0, got " + std::to_string(q));
    if (q > std::numeric_limits<i64>::max() / 8)
        throw Error(ErrorCode::overflow, "transform input " + std::to_string(q) + " too large");
}

} // namespace

bool half_sum_excluded(i64 n) {
    if (n <= 0) return false;
    i64 m = n;
    const int e = strip_factor(m, 5);
    const i64 r = m % 5;
    return e % 2 == 1 && (r == 2 || r == 3);
}

QuaternaryWitness half_sum_transform(i64 n, const SearchOptions& options) {
    require_nonnegative(n);
    if (n % 2 != 0) throw Error(ErrorCode::hypothesis_violation, "half-sum transform needs even n, got " + std::to_string(n));
    if (half_sum_excluded(n))
        throw Error(ErrorCode::hypothesis_violation, std::to_string(n) + " is 5^(2k+1) m with m = +-2 (mod 5)");
    if (n == 0) return {0, 0, 0, WitnessKind::half_sum, 0};

    const auto rep = represent_guaranteed(kDicksonForm, 8 * n, options);
    const i64 s = rep.a;
    i64 t = rep.b;
    const i64 z = rep.c;
    // With z odd, take t != z (mod 4) so that w below comes out odd.
    if (z % 2 != 0 && mod(t - z, 4) == 0) t = -t;

    const auto context = [&] {
        return " (n=" + std::to_string(n) + ", s=" + std::to_string(s) + ", t=" + std::to_string(t) +
               ", z=" + std::to_string(z) + ")";
    };
    if (s % 2 != 0 || (t - z) % 2 != 0) throw Error(ErrorCode::internal, "parity of s, t - z" + context());
    const i64 r = s / 2;
    const i64 w = (t - z) / 2;
    if (mod(w - z, 2) != 0 || mod(w - r, 2) != 0) throw Error(ErrorCode::internal, "w, z, r not congruent mod 2" + context());

    return checked({(r + w) / 2, (w - r) / 2, z, WitnessKind::half_sum, n});
}

QuaternaryWitness substitute_234(i64 a, i64 b, i64 c) {
    QuaternaryWitness w{a + b + 2 * c, -b + 2 * c, -3 * c, WitnessKind::form_234, 0};
    w.target = narrow(6 * kRamanujanForm.evaluate(a, b, c));
    return w;
}

QuaternaryWitness substitute_123(i64 a, i64 b, i64 c) {
    QuaternaryWitness w{6 * c, a - b - c, b - c, WitnessKind::form_123, 0};
    w.target = narrow(6 * kForm117.evaluate(a, b, c));
    return w;
}

QuaternaryWitness substitute_126(i64 a, i64 b, i64 c) {
    QuaternaryWitness w{2 * a - b + 3 * c, -a - b + 3 * c, -2 * c, WitnessKind::form_126, 0};
    w.target = narrow(6 * kDicksonForm.evaluate(a, b, c));
    return w;
}

QuaternaryWitness transform_234(i64 q, const SearchOptions& options) {
    require_nonnegative(q);
    const auto rep = represent_guaranteed(kRamanujanForm, q, options);
    return checked(substitute_234(rep.a, rep.b, rep.c));
}

QuaternaryWitness transform_123(i64 q, const SearchOptions& options) {
    require_nonnegative(q);
    if (!form_117_guaranteed(q))
        throw Error(ErrorCode::hypothesis_violation,
                    std::to_string(q) + " is not a multiple of 9 outside 7^(2k+1)(7m+3,5,6)");
    const auto rep = represent_guaranteed(kForm117, q, options);
    return checked(substitute_123(rep.a, rep.b, rep.c));
}

QuaternaryWitness transform_126(i64 q, const SearchOptions& options) {
    require_nonnegative(q);
    if (dickson_excluded(q))
        throw Error(ErrorCode::hypothesis_violation, std::to_string(q) + " is in the x^2+2y^2+10z^2 exceptional set");
    const auto rep = represent_guaranteed(kDicksonForm, q, options);
    return checked(substitute_126(rep.a, rep.b, rep.c));
}

} // namespace pentasum
