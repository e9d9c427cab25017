#pragma once
// Generated by tests/oracles/gen_closed_form.py (mpmath, 60 digits). Do not edit.

namespace oracle {
inline constexpr double kLeakage43dB = 5.01187233627272285e-5;
inline constexpr double kH2_0_11 = 4.9991595816452799564e-1;
inline constexpr double kH2_0_01 = 8.0793135895911172825e-2;
inline constexpr double kH2_0_25 = 8.1127812445913286391e-1;
inline constexpr double kH2_0_04 = 2.4229218908241476155e-1;
inline constexpr double kDetect_1 = 2.06e-1;
inline constexpr double kDetect_5 = 6.84425057223776e-1;
inline constexpr double kDetect_30 = 9.9901232269906041338e-1;
inline constexpr double kDetect_300_complement = 8.8338643915496460394e-31;
inline constexpr double kGain_mu = 1.1626673650108508265e-1;
inline constexpr double kGain_nu1 = 2.0389269496749415546e-2;
inline constexpr double kGain_nu2 = 2.0578796562193031603e-3;
inline constexpr double kGain_mu_50km = 1.2283928935335315637e-2;
inline constexpr double kGain_mu_200km = 1.2359923615514704404e-5;
inline constexpr double kEta_50km = 2.06e-2;
inline constexpr double kIdealGain_defaults = 2.9066759125271270663e-2;
inline constexpr double kIdealVacuumError_defaults = 1.085e-7;
inline constexpr double kIdealQber_defaults = 4.0003629575610590725e-2;
inline constexpr double kLeakageGain_defaults = 3.0852308634752540878e-3;
inline constexpr double kPracticalGain_defaults = 2.9748389410177911042e-2;
inline constexpr double kPracticalVacuumError_defaults = 7.7141611251357959553e-4;
inline constexpr double kIdealGain_alt = 9.251e-2;
inline constexpr double kIdealVacuumError_alt = 1.1875e-5;
inline constexpr double kIdealQber_alt = 1.3211409577342989947e-1;
inline constexpr double kLeakageGain_alt = 2.7021112573094320327e-1;
inline constexpr double kPracticalGain_alt = 9.444725e-2;
inline constexpr double kPracticalVacuumError_alt = 3.0868519375e-3;
inline constexpr double k_no_attack_0km_e0_Q = 1.1626703650108508265e-1;
inline constexpr double k_no_attack_0km_e0_E = 1.2901335108734804512e-6;
inline constexpr double k_no_attack_0km_e0_Y1 = 1.9903623230874178127e-1;
inline constexpr double k_no_attack_0km_e0_e1 = 7.9651118365164286842e-7;
inline constexpr double k_no_attack_0km_e0_R = 3.2767626030242961995e-2;
inline constexpr double k_no_attack_0km_e1pct_Q = 1.1626703650108508265e-1;
inline constexpr double k_no_attack_0km_e1pct_E = 1.0001264330840656011e-2;
inline constexpr double k_no_attack_0km_e1pct_Y1 = 1.9903623230874178127e-1;
inline constexpr double k_no_attack_0km_e1pct_e1 = 1.14197481489166051e-2;
inline constexpr double k_no_attack_0km_e1pct_R = 2.4369756904184669267e-2;
inline constexpr double k_no_attack_5km_e0_Q = 9.3513644510658705921e-2;
inline constexpr double k_no_attack_5km_e0_E = 1.6040439957711515218e-6;
inline constexpr double k_no_attack_5km_e0_Y1 = 1.5781983439321709228e-1;
inline constexpr double k_no_attack_5km_e0_e1 = 1.0045289021834945331e-6;
inline constexpr double k_no_attack_5km_e0_R = 2.5981650470517183583e-2;
inline constexpr double k_no_attack_5km_e1pct_Q = 9.3513644510658705921e-2;
inline constexpr double k_no_attack_5km_e1pct_E = 1.0001571963115855728e-2;
inline constexpr double k_no_attack_5km_e1pct_Y1 = 1.5781983439321709228e-1;
inline constexpr double k_no_attack_5km_e1pct_e1 = 1.1466629783433635787e-2;
inline constexpr double k_no_attack_5km_e1pct_R = 1.9253313623128455902e-2;
inline constexpr double k_no_attack_50km_e0_Q = 1.2284228935335315637e-2;
inline constexpr double k_no_attack_50km_e0_E = 1.2210778616192041441e-5;
inline constexpr double k_no_attack_50km_e0_Y1 = 1.973816608189285779e-2;
inline constexpr double k_no_attack_50km_e0_e1 = 8.0318801821833729252e-6;
inline constexpr double k_no_attack_50km_e0_R = 3.2477356339778555835e-3;
inline constexpr double k_no_attack_50km_e1pct_Q = 1.2284228935335315637e-2;
inline constexpr double k_no_attack_50km_e1pct_E = 1.0011966563043868201e-2;
inline constexpr double k_no_attack_50km_e1pct_Y1 = 1.973816608189285779e-2;
inline constexpr double k_no_attack_50km_e1pct_e1 = 1.1639529264115796946e-2;
inline constexpr double k_no_attack_50km_e1pct_R = 2.3762807887758561734e-3;
inline constexpr double k_no_attack_100km_e0_Q = 1.2355364666081560726e-3;
inline constexpr double k_no_attack_100km_e0_E = 1.2140475336335962261e-4;
inline constexpr double k_no_attack_100km_e0_Y1 = 1.9722603692679024991e-3;
inline constexpr double k_no_attack_100km_e0_e1 = 8.0382178466957114162e-5;
inline constexpr double k_no_attack_100km_e0_R = 3.2306992858187706931e-4;
inline constexpr double k_no_attack_100km_e1pct_Q = 1.2355364666081560726e-3;
inline constexpr double k_no_attack_100km_e1pct_E = 1.011897665829609243e-2;
inline constexpr double k_no_attack_100km_e1pct_Y1 = 1.9722603692679024991e-3;
inline constexpr double k_no_attack_100km_e1pct_e1 = 1.1732829588506796017e-2;
inline constexpr double k_no_attack_100km_e1pct_R = 2.3636002134963217328e-4;
inline constexpr double k_ideal_attack_0km_e0_Q = 2.9066759125271270663e-2;
inline constexpr double k_ideal_attack_0km_e0_E = 3.7327862914606034389e-6;
inline constexpr double k_ideal_attack_0km_e0_Y1 = 4.9759111206437145998e-2;
inline constexpr double k_ideal_attack_0km_e0_e1 = 2.3045698973730856905e-6;
inline constexpr double k_ideal_attack_0km_e0_R = 1.6381814921222129874e-2;
inline constexpr double k_ideal_attack_0km_e1pct_Q = 2.9066759125271270663e-2;
inline constexpr double k_ideal_attack_0km_e1pct_E = 4.0003629575610590725e-2;
inline constexpr double k_ideal_attack_0km_e1pct_Y1 = 4.9759111206437145998e-2;
inline constexpr double k_ideal_attack_0km_e1pct_e1 = 4.5678062351440746509e-2;
inline constexpr double k_ideal_attack_0km_e1pct_R = 3.8279697485016396779e-3;
inline constexpr double k_ideal_attack_5km_e0_Q = 2.337841112766467648e-2;
inline constexpr double k_ideal_attack_5km_e0_E = 4.6410339610978650697e-6;
inline constexpr double k_ideal_attack_5km_e0_Y1 = 3.9455011727555973751e-2;
inline constexpr double k_ideal_attack_5km_e0_e1 = 2.9064330432401118513e-6;
inline constexpr double k_ideal_attack_5km_e0_R = 1.2988861289995379892e-2;
inline constexpr double k_ideal_attack_5km_e1pct_Q = 2.337841112766467648e-2;
inline constexpr double k_ideal_attack_5km_e1pct_E = 4.0004512710441436173e-2;
inline constexpr double k_ideal_attack_5km_e1pct_Y1 = 3.9455011727555973751e-2;
inline constexpr double k_ideal_attack_5km_e1pct_e1 = 4.5865345693733085501e-2;
inline constexpr double k_ideal_attack_5km_e1pct_R = 2.9315266712183129463e-3;
inline constexpr double k_ideal_attack_50km_e0_Q = 3.0710572338338289093e-3;
inline constexpr double k_ideal_attack_50km_e0_E = 3.532985279618230657e-5;
inline constexpr double k_ideal_attack_50km_e0_Y1 = 4.9345946497249151278e-3;
inline constexpr double k_ideal_attack_50km_e0_e1 = 2.323865645434269145e-5;
inline constexpr double k_ideal_attack_50km_e0_R = 1.6222191641583125979e-3;
inline constexpr double k_ideal_attack_50km_e1pct_Q = 3.0710572338338289093e-3;
inline constexpr double k_ideal_attack_50km_e1pct_E = 4.0034352990506886943e-2;
inline constexpr double k_ideal_attack_50km_e1pct_Y1 = 4.9345946497249151278e-3;
inline constexpr double k_ideal_attack_50km_e1pct_e1 = 4.6548727261274683289e-2;
inline constexpr double k_ideal_attack_50km_e1pct_R = 3.199456742280908299e-4;
inline constexpr double k_ideal_attack_100km_e0_Q = 3.0888411665203901814e-4;
inline constexpr double k_ideal_attack_100km_e0_E = 3.5126441973132050808e-4;
inline constexpr double k_ideal_attack_100km_e0_Y1 = 4.9311822156867630506e-4;
inline constexpr double k_ideal_attack_100km_e0_e1 = 2.3254737868254644679e-4;
inline constexpr double k_ideal_attack_100km_e0_R = 1.6024135599752050954e-4;
inline constexpr double k_ideal_attack_100km_e1pct_Q = 3.0888411665203901814e-4;
inline constexpr double k_ideal_attack_100km_e1pct_E = 4.0341552039462251738e-2;
inline constexpr double k_ideal_attack_100km_e1pct_Y1 = 4.9311822156867630506e-4;
inline constexpr double k_ideal_attack_100km_e1pct_e1 = 4.6837315214460733176e-2;
inline constexpr double k_ideal_attack_100km_e1pct_R = 3.0704739013467445283e-5;
inline constexpr double k_practical_attack_0km_e0_Q = 2.9748389410177911042e-2;
inline constexpr double k_practical_attack_0km_e0_E = 2.5931357219952638799e-2;
inline constexpr double k_practical_attack_0km_e0_Y1 = 5.0655122435221247847e-2;
inline constexpr double k_practical_attack_0km_e0_e1 = 1.6095263732388716516e-2;
inline constexpr double k_practical_attack_0km_e0_R = 8.7073818791940815236e-3;
inline constexpr double k_practical_attack_0km_e1pct_Q = 2.9748389410177911042e-2;
inline constexpr double k_practical_attack_0km_e1pct_E = 6.5014729061692203519e-2;
inline constexpr double k_practical_attack_0km_e1pct_Y1 = 5.0655122435221247847e-2;
inline constexpr double k_practical_attack_0km_e1pct_e1 = 6.0963087589622211282e-2;
inline constexpr double k_practical_attack_0km_e1pct_R = 0.0;
inline constexpr double k_practical_attack_5km_e0_Q = 2.4077591279375720384e-2;
inline constexpr double k_practical_attack_5km_e0_E = 3.2038757679816414712e-2;
inline constexpr double k_practical_attack_5km_e0_Y1 = 4.0382813482072639075e-2;
inline constexpr double k_practical_attack_5km_e0_e1 = 2.0189468852963165818e-2;
inline constexpr double k_practical_attack_5km_e0_R = 5.690482693512774629e-3;
inline constexpr double k_practical_attack_5km_e1pct_Q = 2.4077591279375720384e-2;
inline constexpr double k_practical_attack_5km_e1pct_E = 7.0877088069933122315e-2;
inline constexpr double k_practical_attack_5km_e1pct_Y1 = 4.0382813482072639075e-2;
inline constexpr double k_practical_attack_5km_e1pct_e1 = 6.4998211059301608939e-2;
inline constexpr double k_practical_attack_5km_e1pct_R = 0.0;
inline constexpr double k_practical_attack_50km_e0_Q = 3.8328902605336341226e-3;
inline constexpr double k_practical_attack_50km_e0_E = 2.012622486108379195e-1;
inline constexpr double k_practical_attack_50km_e0_Y1 = 5.9688998604301430762e-3;
inline constexpr double k_practical_attack_50km_e0_e1 = 1.3659260065598959322e-1;
inline constexpr double k_practical_attack_50km_e0_R = 0.0;
inline constexpr double k_practical_attack_50km_e1pct_Q = 3.8328902605336341226e-3;
inline constexpr double k_practical_attack_50km_e1pct_E = 2.3331098494388671831e-1;
inline constexpr double k_practical_attack_50km_e1pct_Y1 = 5.9688998604301430762e-3;
inline constexpr double k_practical_attack_50km_e1pct_e1 = 1.7505604157701706981e-1;
inline constexpr double k_practical_attack_50km_e1pct_R = 0.0;
inline constexpr double k_practical_attack_100km_e0_Q = 1.0792390851032351393e-3;
inline constexpr double k_practical_attack_100km_e0_E = 7.147777755285701243e-1;
inline constexpr double k_practical_attack_100km_e0_Y1 = 1.5411264124294497135e-3;
inline constexpr double k_practical_attack_100km_e0_e1 = 5.2903353574095598085e-1;
inline constexpr double k_practical_attack_100km_e0_R = 0.0;
inline constexpr double k_practical_attack_100km_e1pct_Q = 1.0792390851032351393e-3;
inline constexpr double k_practical_attack_100km_e1pct_E = 7.2622321411264437443e-1;
inline constexpr double k_practical_attack_100km_e1pct_Y1 = 1.5411264124294497135e-3;
inline constexpr double k_practical_attack_100km_e1pct_e1 = 5.4394578437056153579e-1;
inline constexpr double k_practical_attack_100km_e1pct_R = 0.0;
inline constexpr double kPoissonSum_mu_eta0_1 = 5.8235466415751290463e-2;
inline constexpr double kPoissonSum_nu1_eta0_1 = 9.9501662508319464261e-3;
inline constexpr double kPoissonSum_nu2_eta0_1 = 9.9950016662500833194e-4;
inline constexpr double kPoissonSum_mu_eta0_5 = 2.5918177931828213393e-1;
inline constexpr double kPoissonSum_nu1_eta0_5 = 4.8770575499285990909e-2;
inline constexpr double kPoissonSum_nu2_eta0_5 = 4.9875208073176866474e-3;
inline constexpr double kPoissonSum_mu_eta0_9 = 4.1725174762601033501e-1;
inline constexpr double kPoissonSum_nu1_eta0_9 = 8.6068814728771813253e-2;
inline constexpr double kPoissonSum_nu2_eta0_9 = 8.9596212271163378354e-3;
inline constexpr double kTail_binom_300_ge8 = 1.0;
inline constexpr double kFock1_none = 7.94e-1;
inline constexpr double kFock1_click = 2.06e-1;
inline constexpr double kFock1_wide = 0.0;
inline constexpr double kFock1_ap = 0.0;
inline constexpr double kFock12_none = 6.2783573209582325496e-2;
inline constexpr double kFock12_click = 9.3718325608742992081e-1;
inline constexpr double kFock12_wide = 3.317070298775369543e-5;
inline constexpr double kFock12_ap = 5.9522059670381694515e-8;
inline constexpr double kFock150_none = 9.3988639694112213699e-16;
inline constexpr double kFock150_click = 3.9005067085171652591e-7;
inline constexpr double kFock150_wide = 9.999996099493282084e-1;
inline constexpr double kFock150_ap = 1.9794734338061378442e-7;
inline constexpr double kFock300_none = 8.8338643915496460394e-31;
inline constexpr double kFock300_click = 1.7256339442810615036e-19;
inline constexpr double kFock300_wide = 9.9999999999999999983e-1;
inline constexpr double kFock300_ap = 3.9005447608388352429e-7;
inline constexpr double kCoh5_none = 3.5700696056914736977e-1;
inline constexpr double kCoh5_click = 6.42992419626336341e-1;
inline constexpr double kCoh5_wide = 6.1980451628922883965e-7;
inline constexpr double kCoh5_ap = 5.9970388692939527002e-8;
inline constexpr double kCoh150_none = 3.8045255864221646747e-14;
inline constexpr double kCoh150_click = 2.742046881994438498e-6;
inline constexpr double kCoh150_wide = 9.9999725795307996031e-1;
inline constexpr double kCoh150_ap = 1.9792822371911944615e-7;
inline constexpr double kCoh300_none = 1.4474414937740916009e-27;
inline constexpr double kCoh300_click = 4.183007707088296544e-17;
inline constexpr double kCoh300_wide = 9.9999999999999995817e-1;
inline constexpr double kCoh300_ap = 3.9001779183554949879e-7;
inline constexpr double kCoh3000_none = 4.0365485817711824028e-269;
inline constexpr double kCoh3000_click = 9.4407952038326745663e-250;
inline constexpr double kCoh3000_wide = 1.0;
inline constexpr double kCoh3000_ap = 3.1303406642565584622e-6;
}  // namespace oracle
