// Closed-form nonzero entries of the lower-order operator matrices.
//
// Third order: index 0 = E2, 1 = E1, 2 = E0. Fifth order: 0 = G4 .. 4 = G0.
// Entry (k, k+d) for d >= 0 and (k-d, k) for d < 0, both evaluated at k.

#include <array>

#include "gjp/assembly.hpp"
#include "gjp/jacobi.hpp"

namespace gjp {
namespace {

double P(double a, int n) { return pochhammer(a, n); }

// ---- third order -----------------------------------------------------------

double e2_0(double k) { return 4 * (k + 1) * (k + 3) / ((2 * k + 3) * (2 * k + 5)); }
double e2_p1(double k) { return 2 * (k + 1) * (k + 2) / (2 * k + 5); }
double e2_m1(double k) { return -2 * (k + 3) * (k + 4) / (2 * k + 5); }

double e1_0(double k) { return 4 * (k + 1) * (k + 3) / ((2 * k + 3) * (2 * k + 5)); }
double e1_p1(double k) { return -8 * (k + 1) * (k + 2) / ((2 * k + 3) * (2 * k + 5) * (2 * k + 7)); }
double e1_p2(double k) {
  return -2 * (k + 1) * (k + 2) * (k + 3) / ((k + 4) * (2 * k + 5) * (2 * k + 7));
}
double e1_m1(double k) { return 8 * (k + 3) * (k + 4) / ((2 * k + 3) * (2 * k + 5) * (2 * k + 7)); }
double e1_m2(double k) {
  return -2 * (k + 3) * (k + 4) * (k + 5) / ((k + 2) * (2 * k + 5) * (2 * k + 7));
}

double e0_0(double k) { return 3 * (k + 1) * (k + 3) / (2 * P(k + 0.5, 4)); }
double e0_p1(double k) { return 3 * P(k + 1, 2) / (4 * P(k + 1.5, 3)); }
double e0_p2(double k) { return -3 * P(k + 1, 3) / (4 * (k + 4) * P(k + 1.5, 4)); }
double e0_p3(double k) { return -P(k + 1, 3) / (4 * (k + 5) * P(k + 2.5, 3)); }
double e0_m1(double k) { return -3 * P(k + 3, 2) / (4 * P(k + 1.5, 3)); }
double e0_m2(double k) { return -3 * P(k + 3, 3) / (4 * (k + 2) * P(k + 1.5, 4)); }
// As published; infinite at k = 0.
double e0_m2_printed(double k) { return -3 * P(k + 3, 5) / (4 * k * P(k + 1.5, 4)); }
double e0_m3(double k) { return P(k + 4, 3) / (4 * (k + 2) * P(k + 2.5, 3)); }

constexpr std::array<EntryFormula, 15> kThird{{
    {0, 0, e2_0, "E2(k,k)"},
    {0, 1, e2_p1, "E2(k,k+1)"},
    {0, -1, e2_m1, "E2(k+1,k)"},
    {1, 0, e1_0, "E1(k,k)"},
    {1, 1, e1_p1, "E1(k,k+1)"},
    {1, 2, e1_p2, "E1(k,k+2)"},
    {1, -1, e1_m1, "E1(k+1,k)"},
    {1, -2, e1_m2, "E1(k+2,k)"},
    {2, 0, e0_0, "E0(k,k)"},
    {2, 1, e0_p1, "E0(k,k+1)"},
    {2, 2, e0_p2, "E0(k,k+2)"},
    {2, 3, e0_p3, "E0(k,k+3)"},
    {2, -1, e0_m1, "E0(k+1,k)"},
    {2, -2, e0_m2, "E0(k+2,k)"},
    {2, -3, e0_m3, "E0(k+3,k)"},
}};

constexpr std::array<EntryFormula, 15> kThirdPrinted = [] {
  auto t = kThird;
  t[13].value = e0_m2_printed;
  return t;
}();

// ---- fifth order -----------------------------------------------------------

constexpr double H = 0.5;

double rk(double k) { return 3 * (k + 1) * (k + 2) * (k + 4) * (k + 5); }

double g4_0(double k) { return rk(k) / (2 * P(k + 5 * H, 2)); }
double g4_p1(double k) { return 3 * P(k + 1, 3) * (k + 5) / (2 * k + 7); }
double g4_m1(double k) { return -3 * P(k + 2, 5) / ((k + 3) * (2 * k + 7)); }

double g3_0(double k) { return rk(k) / (2 * P(k + 5 * H, 2)); }
double g3_p1(double k) { return -3 * P(k + 1, 3) * (k + 5) / (2 * P(k + 5 * H, 3)); }
double g3_p2(double k) { return -3 * P(k + 1, 4) / (4 * P(k + 7 * H, 2)); }
double g3_m1(double k) { return 3 * (k + 2) * P(k + 4, 3) / (2 * P(k + 5 * H, 3)); }
double g3_m2(double k) { return -3 * P(k + 4, 4) / (4 * P(k + 7 * H, 2)); }

double g2_0(double k) { return 3 * rk(k) / (4 * P(k + 3 * H, 4)); }
double g2_p1(double k) { return 9 * P(k + 1, 3) * (k + 5) / (8 * P(k + 5 * H, 3)); }
double g2_p2(double k) { return -9 * P(k + 1, 4) / (8 * P(k + 5 * H, 4)); }
double g2_p3(double k) { return -3 * P(k + 1, 5) / (8 * (k + 6) * P(k + 7 * H, 3)); }
double g2_m1(double k) { return -9 * (k + 2) * P(k + 4, 3) / (8 * P(k + 5 * H, 3)); }
double g2_m2(double k) { return -9 * P(k + 4, 4) / (8 * P(k + 5 * H, 4)); }
double g2_m3(double k) { return 3 * P(k + 4, 5) / (8 * (k + 3) * P(k + 7 * H, 3)); }

double g1_0(double k) { return 3 * rk(k) / (8 * P(k + 3 * H, 4)); }
double g1_p1(double k) { return -9 * P(k + 1, 3) * (k + 5) / (4 * P(k + 3 * H, 5)); }
double g1_p2(double k) { return -3 * P(k + 1, 4) / (4 * P(k + 5 * H, 4)); }
double g1_p3(double k) { return 3 * P(k + 1, 5) / (4 * (k + 6) * P(k + 5 * H, 5)); }
double g1_p4(double k) { return 3 * P(k + 1, 5) / (16 * (k + 7) * P(k + 7 * H, 4)); }
double g1_m1(double k) { return 9 * (k + 2) * P(k + 4, 3) / (4 * P(k + 3 * H, 5)); }
double g1_m2(double k) { return -3 * P(k + 4, 4) / (4 * P(k + 5 * H, 4)); }
double g1_m3(double k) { return -3 * P(k + 4, 5) / (4 * (k + 3) * P(k + 5 * H, 5)); }
double g1_m4(double k) { return 3 * P(k + 5, 5) / (16 * (k + 3) * P(k + 7 * H, 4)); }

double g0_0(double k) { return 15 * rk(k) / (16 * P(k + H, 6)); }
double g0_p1(double k) { return 15 * P(k + 1, 3) * (k + 5) / (16 * P(k + 3 * H, 5)); }
double g0_p2(double k) { return -15 * P(k + 1, 4) / (8 * P(k + 3 * H, 6)); }
double g0_p3(double k) { return -15 * P(k + 1, 5) / (32 * (k + 6) * P(k + 5 * H, 5)); }
double g0_p4(double k) { return 15 * P(k + 1, 5) / (32 * (k + 7) * P(k + 5 * H, 6)); }
double g0_p5(double k) { return 3 * P(k + 1, 5) / (32 * (k + 8) * P(k + 7 * H, 5)); }
double g0_m1(double k) { return -15 * (k + 2) * P(k + 4, 3) / (16 * P(k + 3 * H, 5)); }
double g0_m2(double k) { return -15 * P(k + 4, 4) / (8 * P(k + 3 * H, 6)); }
double g0_m3(double k) { return 15 * P(k + 4, 5) / (32 * (k + 3) * P(k + 5 * H, 5)); }
double g0_m4(double k) { return 15 * P(k + 5, 5) / (32 * (k + 3) * P(k + 5 * H, 6)); }
double g0_m5(double k) { return -3 * P(k + 6, 5) / (32 * (k + 3) * P(k + 7 * H, 5)); }

constexpr std::array<EntryFormula, 35> kFifth{{
    {0, 0, g4_0, "G4(k,k)"},      {0, 1, g4_p1, "G4(k,k+1)"},   {0, -1, g4_m1, "G4(k+1,k)"},
    {1, 0, g3_0, "G3(k,k)"},      {1, 1, g3_p1, "G3(k,k+1)"},   {1, 2, g3_p2, "G3(k,k+2)"},
    {1, -1, g3_m1, "G3(k+1,k)"},  {1, -2, g3_m2, "G3(k+2,k)"},  {2, 0, g2_0, "G2(k,k)"},
    {2, 1, g2_p1, "G2(k,k+1)"},   {2, 2, g2_p2, "G2(k,k+2)"},   {2, 3, g2_p3, "G2(k,k+3)"},
    {2, -1, g2_m1, "G2(k+1,k)"},  {2, -2, g2_m2, "G2(k+2,k)"},  {2, -3, g2_m3, "G2(k+3,k)"},
    {3, 0, g1_0, "G1(k,k)"},      {3, 1, g1_p1, "G1(k,k+1)"},   {3, 2, g1_p2, "G1(k,k+2)"},
    {3, 3, g1_p3, "G1(k,k+3)"},   {3, 4, g1_p4, "G1(k,k+4)"},   {3, -1, g1_m1, "G1(k+1,k)"},
    {3, -2, g1_m2, "G1(k+2,k)"},  {3, -3, g1_m3, "G1(k+3,k)"},  {3, -4, g1_m4, "G1(k+4,k)"},
    {4, 0, g0_0, "G0(k,k)"},      {4, 1, g0_p1, "G0(k,k+1)"},   {4, 2, g0_p2, "G0(k,k+2)"},
    {4, 3, g0_p3, "G0(k,k+3)"},   {4, 4, g0_p4, "G0(k,k+4)"},   {4, 5, g0_p5, "G0(k,k+5)"},
    {4, -1, g0_m1, "G0(k+1,k)"},  {4, -2, g0_m2, "G0(k+2,k)"},  {4, -3, g0_m3, "G0(k+3,k)"},
    {4, -4, g0_m4, "G0(k+4,k)"},  {4, -5, g0_m5, "G0(k+5,k)"},
}};

}  // namespace

EntryTable third_order_entries() { return kThird; }
EntryTable fifth_order_entries() { return kFifth; }
EntryTable printed_third_order_entries() { return kThirdPrinted; }
// The published fifth-order table agrees with the oracle everywhere.
EntryTable printed_fifth_order_entries() { return kFifth; }

EntryTable default_entries(Order order) {
  return order == Order::third ? third_order_entries() : fifth_order_entries();
}

EntryTable printed_entries(Order order) {
  return order == Order::third ? printed_third_order_entries() : printed_fifth_order_entries();
}

double leading_diagonal(Order order, int k) {
  const double kk = k;
  return order == Order::third ? 2 * (kk + 1) * (kk + 3) : rk(kk);
}

}  // namespace gjp
