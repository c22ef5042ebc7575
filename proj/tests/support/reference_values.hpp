// Generated by tests/fixtures/compute_reference_values.py -- do not edit.
// Frozen expected values for the test suite; see that script for the
// independent numerics behind each number.
#pragma once

namespace refvals {

inline constexpr double cases_exp_integral_0_1 = 1.718281828459045;
inline constexpr double cases_history_at_0_0 = 1.0;
inline constexpr double cases_history_at_0_1 = 0.12;
inline constexpr double cases_history_at_0_2 = 0.16;
inline constexpr double cases_history_at_0_3 = 0.00215;
inline constexpr double cases_history_at_0_4 = 0.00327;
inline constexpr double cases_michaelis_inverse_146 = 4.055555555555555;
inline constexpr double cases_rhs_generic_0 = 0.5882527905031871;
inline constexpr double cases_rhs_generic_1 = -1.8407218006055006;
inline constexpr double cases_rhs_generic_2 = -1.4300138782766487;
inline constexpr double cases_rhs_generic_3 = 0.6917207652304853;
inline constexpr double cases_rhs_generic_4 = 0.1320918367285866;
inline constexpr double cases_rhs_generic_t = 0.7;
inline constexpr double cases_rhs_generic_x_0 = 1.0;
inline constexpr double cases_rhs_generic_x_1 = 0.5;
inline constexpr double cases_rhs_generic_x_2 = 0.25;
inline constexpr double cases_rhs_generic_x_3 = 0.125;
inline constexpr double cases_rhs_generic_x_4 = 0.0625;
inline constexpr double const_C = 40.14999999999999;
inline constexpr double const_M_upper = 2.5540540540540544;
inline constexpr double const_P0_upper = 1.2294752698970628;
inline constexpr double const_P1_upper = 0.7667457425153814;
inline constexpr double const_P2_upper = 1.8076993793474467;
inline constexpr double const_PN_upper = 3.2075618158898362;
inline constexpr double const_P_tilde = 0.7300432411157753;
inline constexpr double const_cap_PN = 1.0776561382316714;
inline constexpr double const_equilibrium_0 = 2.554041035248689;
inline constexpr double const_equilibrium_1 = 0.16080708766338106;
inline constexpr double const_equilibrium_2 = 0.0452107983631757;
inline constexpr double const_equilibrium_3 = 0.030426867571816184;
inline constexpr double const_equilibrium_4 = 0.04447003722034673;
inline constexpr double const_equilibrium_residual_max = 2.914335439641036e-16;
inline constexpr double const_gronwall_exponent = 252.26989008326032;
inline constexpr double const_jacobian_eigs_imag_0 = 0.0;
inline constexpr double const_jacobian_eigs_imag_1 = 0.0;
inline constexpr double const_jacobian_eigs_imag_2 = 0.0;
inline constexpr double const_jacobian_eigs_imag_3 = 0.0;
inline constexpr double const_jacobian_eigs_imag_4 = 0.0;
inline constexpr double const_jacobian_eigs_real_0 = -33.45375085665917;
inline constexpr double const_jacobian_eigs_real_1 = -18.66067975261303;
inline constexpr double const_jacobian_eigs_real_2 = -5.12673259746983;
inline constexpr double const_jacobian_eigs_real_3 = -0.18253982150646586;
inline constexpr double const_jacobian_eigs_real_4 = -1.2126070101712627;
inline constexpr double const_m_lower = 0.01837892812555994;
inline constexpr double const_multiplier_magnitudes_0 = 5.1640063510030894e-92;
inline constexpr double const_multiplier_magnitudes_1 = 1.201211822229531e-51;
inline constexpr double const_multiplier_magnitudes_2 = 1.0242702129647766e-14;
inline constexpr double const_multiplier_magnitudes_3 = 0.0004910156535645662;
inline constexpr double const_multiplier_magnitudes_4 = 0.3176098537387638;
inline constexpr double const_p0_lower = 0.0009709407959905801;
inline constexpr double const_p1_lower = 0.0002729943876779214;
inline constexpr double const_p2_lower = 4.921737500145834e-114;
inline constexpr double const_p2_tilde_lower = 0.00017845949532097435;
inline constexpr double const_pN_lower = 7.193308654059295e-114;
inline constexpr double const_window_width = 1.470403079793277;
inline constexpr double example_A_face = 8.437696387235661;
inline constexpr double example_B = 1.750076714540531e-08;
inline constexpr double example_C = 40.199999999999996;
inline constexpr double example_D = 1.695810769821577e-08;
inline constexpr double example_H1_left = 1.46;
inline constexpr double example_H1_margin = 0.54;
inline constexpr double example_H1_right = 2.0;
inline constexpr double example_H2_left = 5.541111111111111;
inline constexpr double example_H2_margin = 1.6588888888888889;
inline constexpr double example_H2_right = 7.2;
inline constexpr double example_H3_left = 9.04111111111111;
inline constexpr double example_H3_margin = 2.9588888888888896;
inline constexpr double example_H3_right = 12.0;
inline constexpr double example_H4_left = 8.437696387235661;
inline constexpr double example_H4_margin = 1.4123036127643385;
inline constexpr double example_H4_right = 9.85;
inline constexpr double example_M_upper = 4.055555555555555;
inline constexpr double example_P0_upper = 3.3402545210984598;
inline constexpr double example_P1_upper = 2.1603218012934127;
inline constexpr double example_P2_upper = 8.511871317366008;
inline constexpr double example_PN_upper = 12.891498500420033;
inline constexpr double example_P_tilde = 3.1418037230482145;
inline constexpr double example_avg_field_at_center_0 = -1.1447131768233498;
inline constexpr double example_avg_field_at_center_1 = -3.1999837225596353;
inline constexpr double example_avg_field_at_center_2 = -1.286140955770186;
inline constexpr double example_avg_field_at_center_3 = -1.4702264400498202;
inline constexpr double example_avg_field_at_center_4 = -0.29319627377531343;
inline constexpr double example_cap_PN = 5.370067594317795;
inline constexpr double example_center_0 = 2.027777800805103;
inline constexpr double example_center_1 = 1.6701272617645608;
inline constexpr double example_center_2 = 1.0801609009858686;
inline constexpr double example_center_3 = 4.255935658683004;
inline constexpr double example_center_4 = 6.445749250210016;
inline constexpr double example_drain_avg_at_P2 = 9.610481482336937;
inline constexpr double example_faces_f1_lower = 0.00030853610933367345;
inline constexpr double example_faces_f1_upper = -0.2;
inline constexpr double example_faces_f2_lower = 4.069945853921495e-10;
inline constexpr double example_faces_f2_upper = -3.0948779141868252;
inline constexpr double example_faces_f3_lower = 1.3566486179739036e-10;
inline constexpr double example_faces_f3_upper = -1.3724906048877958;
inline constexpr double example_faces_f4_lower = 1.695810769821577e-08;
inline constexpr double example_faces_f4_upper = -0.5863925475506482;
inline constexpr double example_faces_f5_lower = 2.6618223439968107e-120;
inline constexpr double example_faces_f5_upper = -0.5863925475506269;
inline constexpr double example_gronwall_exponent = 252.58404934861935;
inline constexpr double example_gronwall_p2 = 1.55968860376062e+110;
inline constexpr double example_lower_0 = 4.605465038264555e-08;
inline constexpr double example_lower_1 = 2.4306621094366334e-09;
inline constexpr double example_lower_2 = 6.783243090789405e-10;
inline constexpr double example_lower_3 = 8.872741146656041e-120;
inline constexpr double example_lower_4 = 1.0920296795884359e-119;
inline constexpr double example_m_lower = 4.605465038264555e-08;
inline constexpr double example_p0_lower = 2.4306621094366334e-09;
inline constexpr double example_p1_lower = 6.783243090789405e-10;
inline constexpr double example_p2_lower = 8.872741146656041e-120;
inline constexpr double example_p2_tilde_lower = 4.4047033075417205e-10;
inline constexpr double example_pN_lower = 1.0920296795884359e-119;
inline constexpr double example_r = 6.140619862483339e-08;
inline constexpr double example_rhs_at_t0_center_0 = -1.1496051368881177;
inline constexpr double example_rhs_at_t0_center_1 = -3.0223303810484383;
inline constexpr double example_rhs_at_t0_center_2 = -1.4637942972813827;
inline constexpr double example_rhs_at_t0_center_3 = -1.4702264400498208;
inline constexpr double example_rhs_at_t0_center_4 = -0.29319627377531354;
inline constexpr double example_s = 1.750076714540531e-08;
inline constexpr double example_upper_0 = 4.055555555555555;
inline constexpr double example_upper_1 = 3.3402545210984598;
inline constexpr double example_upper_2 = 2.1603218012934127;
inline constexpr double example_upper_3 = 8.511871317366008;
inline constexpr double example_upper_4 = 12.891498500420033;
inline constexpr double example_window_width = 1.1727850951012755;

}  // namespace refvals
