#include "cpdsurf/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace cpdsurf {

namespace {

Vec3<Jet1> dx_of(const Vec3<Jet2>& r) {
  return {{r.x.dx, r.x.dxx, r.x.dxy},
          {r.y.dx, r.y.dxx, r.y.dxy},
          {r.z.dx, r.z.dxx, r.z.dxy}};
}
Vec3<Jet1> dy_of(const Vec3<Jet2>& r) {
  return {{r.x.dy, r.x.dxy, r.x.dyy},
          {r.y.dy, r.y.dxy, r.y.dyy},
          {r.z.dy, r.z.dxy, r.z.dyy}};
}

}  // namespace

SurfaceFrame frame_at(const ParamSurface& S, double x, double y,
                      const FixedDirection& k) {
  const Vec3<Jet2> r = S.immersion(Jet2::var_x(x), Jet2::var_y(y));
  if (!is_finite(r.x) || !is_finite(r.y) || !is_finite(r.z))
    throw DomainError("immersion not finite at sample", x);

  SurfaceFrame fr;
  fr.x = x;
  fr.y = y;
  fr.r = {r.x.val, r.y.val, r.z.val};
  fr.r_x = dx_of(r);
  fr.r_y = dy_of(r);

  fr.E = dot(fr.r_x, fr.r_x);
  fr.F = dot(fr.r_x, fr.r_y);
  fr.G = dot(fr.r_y, fr.r_y);
  const Jet1 det = fr.E * fr.G - fr.F * fr.F;
  if (!(det.val > 0))
    throw DomainError("degenerate metric (EG - F^2 <= 0)", det.val);

  const Vec3<Jet1> c = cross(fr.r_x, fr.r_y);
  const Jet1 c2 = dot(c, c);
  if (!(c2.val > 0)) throw DomainError("degenerate cross product", c2.val);
  fr.N = c / sqrt1(c2);

  fr.cos_theta = dot(k.k, fr.N);
  const double cv = std::clamp(fr.cos_theta.val, -1.0, 1.0);
  const double th = std::acos(cv);
  const double sin2 = 1.0 - cv * cv;
  fr.angle_degenerate = std::min(th, std::acos(-1.0) - th) < 1e-9;
  if (sin2 > 1e-24) {
    fr.theta = compose1(fr.cos_theta, th, -1.0 / std::sqrt(sin2));
  } else {
    fr.theta = Jet1{th, 0.0, 0.0};
    fr.angle_degenerate = true;
  }

  // Tangent part of k through the Gram system [E F; F G] u = (k.r_x, k.r_y).
  const Jet1 b1 = dot(k.k, fr.r_x);
  const Jet1 b2 = dot(k.k, fr.r_y);
  fr.u1 = (fr.G * b1 - fr.F * b2) / det;
  fr.u2 = (fr.E * b2 - fr.F * b1) / det;

  const Vec3d n = value(fr.N);
  fr.e = r.x.dxx * n.x + r.y.dxx * n.y + r.z.dxx * n.z;
  fr.f = r.x.dxy * n.x + r.y.dxy * n.y + r.z.dxy * n.z;
  fr.g2 = r.x.dyy * n.x + r.y.dyy * n.y + r.z.dyy * n.z;

  const double iw = 1.0 / det.val;
  fr.A.a11 = (fr.G.val * fr.e - fr.F.val * fr.f) * iw;
  fr.A.a12 = (fr.G.val * fr.f - fr.F.val * fr.g2) * iw;
  fr.A.a21 = (fr.E.val * fr.f - fr.F.val * fr.e) * iw;
  fr.A.a22 = (fr.E.val * fr.g2 - fr.F.val * fr.f) * iw;

  double dg[2][2][2];  // dg[a][i][j] = d_a g_ij
  dg[0][0][0] = fr.E.dx; dg[0][0][1] = fr.F.dx; dg[0][1][0] = fr.F.dx; dg[0][1][1] = fr.G.dx;
  dg[1][0][0] = fr.E.dy; dg[1][0][1] = fr.F.dy; dg[1][1][0] = fr.F.dy; dg[1][1][1] = fr.G.dy;
  const double inv[2][2] = {{fr.G.val * iw, -fr.F.val * iw},
                            {-fr.F.val * iw, fr.E.val * iw}};
  double Gm[2][2][2];
  for (int kk = 0; kk < 2; ++kk)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        double s = 0;
        for (int l = 0; l < 2; ++l)
          s += inv[kk][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
        Gm[kk][i][j] = 0.5 * s;
      }
  fr.gamma = {Gm[0][0][0], Gm[1][0][0], Gm[0][0][1],
              Gm[1][0][1], Gm[0][1][1], Gm[1][1][1]};
  return fr;
}

FirstForm first_form(const ParamSurface& S, double x, double y) {
  SurfaceFrame fr = frame_at(S, x, y);
  return {fr.E.val, fr.F.val, fr.G.val};
}

Vec3d unit_normal(const ParamSurface& S, double x, double y) {
  return value(frame_at(S, x, y).N);
}

SecondForm second_form(const ParamSurface& S, double x, double y) {
  SurfaceFrame fr = frame_at(S, x, y);
  return {fr.e, fr.f, fr.g2};
}

Mat2 shape_operator(const ParamSurface& S, double x, double y) {
  return frame_at(S, x, y).A;
}

CurvatureData curvatures(const ParamSurface& S, double x, double y) {
  SurfaceFrame fr = frame_at(S, x, y);
  CurvatureData out;
  out.K = fr.A.det();
  out.H = 0.5 * fr.A.trace();
  const Sym2 g{fr.E.val, fr.F.val, fr.G.val};
  const EigPair eig = eig_sym_generalized(fr.A, g, 1e-6);
  out.kappa1 = eig.kappa1;
  out.kappa2 = eig.kappa2;
  out.dir1 = eig.dir1;
  out.dir2 = eig.dir2;
  out.umbilic = eig.umbilic;
  return out;
}

AngleData angle_data(const ParamSurface& S, double x, double y,
                     const FixedDirection& k) {
  SurfaceFrame fr = frame_at(S, x, y, k);
  AngleData out;
  out.theta = fr.theta.val;
  out.cos_theta = fr.cos_theta.val;
  out.U = {fr.u1.val, fr.u2.val};
  const double iw = 1.0 / fr.W2();
  const double tx = fr.theta.dx, ty = fr.theta.dy;
  out.grad_theta = {(fr.G.val * tx - fr.F.val * ty) * iw,
                    (fr.E.val * ty - fr.F.val * tx) * iw};
  out.degenerate = fr.angle_degenerate;
  return out;
}

Christoffels christoffel(const ParamSurface& S, double x, double y) {
  return frame_at(S, x, y).gamma;
}

double laplace_beltrami(const ParamSurface& S, const Expr& field, double x,
                        double y) {
  SurfaceFrame fr = frame_at(S, x, y);
  const Jet2 f = field.jet(x, y);
  const Jet1 fx{f.dx, f.dxx, f.dxy};
  const Jet1 fy{f.dy, f.dxy, f.dyy};
  const Jet1 det = fr.E * fr.G - fr.F * fr.F;
  const Jet1 W = sqrt1(det);
  const Jet1 gxx = fr.G / det, gxy = -(fr.F / det), gyy = fr.E / det;
  const Jet1 P = W * (gxx * fx + gxy * fy);
  const Jet1 Q = W * (gxy * fx + gyy * fy);
  return (P.dx + Q.dy) / W.val;
}

namespace {

double flux_x(const SurfaceFrame& fr, const FrameGradient& grad) {
  const auto s = grad(fr);
  const double det = fr.W2(), W = std::sqrt(det);
  return W * ((fr.G.val * s[0] - fr.F.val * s[1]) / det);
}
double flux_y(const SurfaceFrame& fr, const FrameGradient& grad) {
  const auto s = grad(fr);
  const double det = fr.W2(), W = std::sqrt(det);
  return W * ((-fr.F.val * s[0] + fr.E.val * s[1]) / det);
}

}  // namespace

double laplace_beltrami_fd(const ParamSurface& S, double x, double y,
                           const FrameGradient& grad, const FixedDirection& k,
                           double step) {
  const double w0 = std::sqrt(frame_at(S, x, y, k).W2());
  const double px = (flux_x(frame_at(S, x + step, y, k), grad) -
                     flux_x(frame_at(S, x - step, y, k), grad)) /
                    (2.0 * step);
  const double qy = (flux_y(frame_at(S, x, y + step, k), grad) -
                     flux_y(frame_at(S, x, y - step, k), grad)) /
                    (2.0 * step);
  return (px + qy) / w0;
}

double codazzi_residual(const ParamSurface& S, double x, double y,
                        double step) {
  const SurfaceFrame c = frame_at(S, x, y);
  const Mat2 Axp = frame_at(S, x + step, y).A;
  const Mat2 Axm = frame_at(S, x - step, y).A;
  const Mat2 Ayp = frame_at(S, x, y + step).A;
  const Mat2 Aym = frame_at(S, x, y - step).A;
  const double dxA12 = (Axp.a12 - Axm.a12) / (2.0 * step);
  const double dxA22 = (Axp.a22 - Axm.a22) / (2.0 * step);
  const double dyA11 = (Ayp.a11 - Aym.a11) / (2.0 * step);
  const double dyA21 = (Ayp.a21 - Aym.a21) / (2.0 * step);
  const Christoffels& G = c.gamma;
  // The A(nabla_X Y) terms of the two covariant derivatives cancel because
  // the connection is torsion-free; only derivative and connection-on-A
  // terms remain.
  const double v1 = dxA12 + c.A.a12 * G.xxx + c.A.a22 * G.xxy -
                    (dyA11 + c.A.a11 * G.xxy + c.A.a21 * G.xyy);
  const double v2 = dxA22 + c.A.a12 * G.yxx + c.A.a22 * G.yxy -
                    (dyA21 + c.A.a11 * G.yxy + c.A.a21 * G.yyy);
  return std::sqrt(std::max(0.0, c.gnorm2(v1, v2)));
}

}  // namespace cpdsurf
