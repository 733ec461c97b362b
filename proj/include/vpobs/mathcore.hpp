// Fixed-size 3-vector / 3x3-matrix primitives and DCM integration.
// All attitude math in this project runs through these types; angles are
// radians, frames are NED (x north / forward, y east / right, z down).
#pragma once

#include <array>
#include <cmath>

namespace vpobs {

inline constexpr double kPi = 3.14159265358979323846;

constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

/// Wrap an angle to (-pi, pi].
double wrap_pi(double angle_rad);

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }

    double norm_sq() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }
    bool is_finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// 3x3 matrix, row-major.
struct Mat3 {
    std::array<double, 9> m{};

    double& operator()(int r, int c) { return m[3 * r + c]; }
    double operator()(int r, int c) const { return m[3 * r + c]; }

    static Mat3 identity();
    static Mat3 zero() { return Mat3{}; }

    Mat3 operator+(const Mat3& o) const;
    Mat3 operator-(const Mat3& o) const;
    Mat3 operator*(double s) const;
    Mat3 operator*(const Mat3& o) const;
    Vec3 operator*(const Vec3& v) const;

    Mat3 transpose() const;
    double det() const;
    double max_abs() const;
    bool is_finite() const;
};

inline Mat3 operator*(double s, const Mat3& a) { return a * s; }

/// Skew-symmetric matrix of v: skew(v) * u == cross(v, u).
Mat3 skew(const Vec3& v);

/// Largest |entry| of (a - b); used for matrix closeness checks.
double max_abs_diff(const Mat3& a, const Mat3& b);

struct EulerAngles {
    double roll = 0.0;   // rad, about body x
    double pitch = 0.0;  // rad, about body y
    double yaw = 0.0;    // rad, about body z
};

/// Direction cosine matrix restricted to proper rotations (body -> platform).
/// Construction from a raw Mat3 validates R*R^T = I and det = +1 to 1e-9.
class Dcm {
  public:
    Dcm() : m_(Mat3::identity()) {}
    explicit Dcm(const Mat3& m);  // throws std::invalid_argument if not a rotation

    /// z-y-x (yaw-pitch-roll) convention, C = Rz(yaw)*Ry(pitch)*Rx(roll).
    static Dcm from_euler(const EulerAngles& e);
    static Dcm from_euler(double roll, double pitch, double yaw) {
        return from_euler(EulerAngles{roll, pitch, yaw});
    }

    const Mat3& mat() const { return m_; }

    /// Rotate a body-frame vector into the platform frame.
    Vec3 operator*(const Vec3& v) const { return m_ * v; }
    /// Rotate a platform-frame vector back into the body frame (C^T * v).
    Vec3 unrotate(const Vec3& v) const { return m_.transpose() * v; }

    Dcm transposed() const;

  private:
    struct Unchecked {};
    Dcm(const Mat3& m, Unchecked) : m_(m) {}
    Mat3 m_;

    friend Dcm orthonormalize(const Mat3& m);
};

/// Nearest rotation by iterated symmetric renormalization C <- C*(3I - C^T C)/2,
/// run to an entrywise tolerance of 1e-12. Input must already be close to a
/// rotation (within ~0.1 in Frobenius norm); degenerate or reflecting inputs
/// are rejected with std::domain_error.
Dcm orthonormalize(const Mat3& m);

/// One Euler step of Cdot = C*skew(omega_b) - skew(omega_p)*C followed by
/// re-orthonormalization. omega_b is the body rate, omega_p the platform
/// control rate (both rad/s). Requires dt > 0 and finite inputs.
Dcm dcm_step(const Dcm& c, const Vec3& omega_b, const Vec3& omega_p, double dt);

/// Extract z-y-x Euler angles. Throws std::domain_error within 1e-3 rad of
/// gimbal lock (|pitch| ~ pi/2).
EulerAngles euler_from_dcm(const Dcm& c);

}  // namespace vpobs
