// Generated by tests/oracle/gen_christoffel_fixture.py -- do not edit.
// Analytic Christoffel symbols and metric derivatives for the planar
// Schwarzschild field (m = 3e5 cm), 50-digit arithmetic rounded to double.
#pragma once

#include <array>

namespace dgeo_test_fixture {

inline constexpr double kFixtureMassCm = 3.0e5;

struct ChristoffelSample {
  double x;  // cm
  double y;  // cm
  std::array<double, 27> gamma;  // [lam][mu][nu], index lam*9 + mu*3 + nu
  std::array<double, 9> dg_dx;   // d g_{mu nu}/dx, index mu*3 + nu
  std::array<double, 9> dg_dy;   // d g_{mu nu}/dy
};

inline constexpr std::array<ChristoffelSample, 20> kSchwarzschildSamples = {{
    {2974685.681144364, 388902.42785908456,
     {{0.0, 1.8362257291014592e-08, 2.40063227073509e-09, 1.8362257291014592e-08, 0.0, 0.0, 2.40063227073509e-09, 0.0, 0.0, 1.487342840572182e-08, 0.0, 0.0, 0.0, -1.749823907434362e-08, -6.608810933703692e-09, 0.0, -6.608810933703692e-09, 3.21880449071553e-08, 1.944512139295423e-09, 0.0, 0.0, 0.0, -2.2876728463805305e-09, -8.64018216670972e-10, 0.0, -8.64018216670972e-10, 4.208178662968602e-09}},
     {{3.3052063123826265e-08, 0.0, 0.0, 0.0, 3.8884975720763604e-08, 9.884981977871358e-09, 0.0, 9.884981977871358e-09, 1.920040481491049e-09}},
     {{4.3211380873231614e-09, 0.0, 0.0, 0.0, 1.4686246519341538e-08, -3.4804474100538136e-08, 0.0, -3.4804474100538136e-08, -9.351508139930227e-09}}},
    {2579931.898548616, 2820982.4621131243,
     {{0.0, 7.516914520484937e-09, 8.219241772785075e-09, 7.516914520484937e-09, 0.0, 0.0, 8.219241772785075e-09, 0.0, 0.0, 6.38341258084066e-09, 0.0, 0.0, 0.0, 4.1204798424092255e-09, -1.0642988865067434e-08, 0.0, -1.0642988865067434e-08, 2.216639954829666e-09, 6.979833440221502e-09, 0.0, 0.0, 0.0, 4.505468294518254e-09, -1.1637394362894162e-08, 0.0, -1.1637394362894162e-08, 2.4237470922823593e-09}},
     {{1.3854034317723827e-08, 0.0, 0.0, 0.0, -8.942750984569584e-09, 6.6601852483524085e-09, 0.0, 6.6601852483524085e-09, 2.5256844803722388e-08}},
     {{1.514845715958569e-08, 0.0, 0.0, 0.0, 2.309866879392256e-08, 1.0223015762752515e-08, 0.0, 1.0223015762752515e-08, -5.260301597102944e-09}}},
    {198677.25768493922, 4867277.004224437,
     {{0.0, 2.747272130431934e-10, 6.7303800246744e-09, 2.747272130431934e-10, 0.0, 0.0, 6.7303800246744e-09, 0.0, 0.0, 2.419311157124684e-10, 0.0, 0.0, 0.0, 5.143017024796358e-10, -3.220735146862185e-11, 0.0, -3.220735146862185e-11, -2.7341254197320356e-10, 5.926927771375833e-09, 0.0, 0.0, 0.0, 1.2599574198282128e-08, -7.890289155228293e-10, 0.0, -7.890289155228293e-10, -6.698172673205778e-09}},
     {{5.156163735496258e-10, 0.0, 0.0, 0.0, -1.0961069557423682e-09, -1.3392118040581206e-08, 0.0, -1.3392118040581206e-08, 1.68162010434075e-09}},
     {{1.263178154975075e-08, 0.0, 0.0, 0.0, 6.864200876759382e-11, 1.1321656782543633e-09, 0.0, 1.1321656782543633e-09, 1.4275499424688399e-08}}},
    {-3801964.0389391775, 4906838.191247786,
     {{0.0, -2.505419084292792e-09, 3.2335092920339956e-09, -2.505419084292792e-09, 0.0, 0.0, 3.2335092920339956e-09, 0.0, 0.0, -2.2691007323815755e-09, 0.0, 0.0, 0.0, -2.0398594752778982e-09, -3.5218168924487306e-09, 0.0, -3.5218168924487306e-09, -2.2338929595942645e-10, 2.928515372424425e-09, 0.0, 0.0, 0.0, 2.6326551949357836e-09, 4.54527855957069e-09, 0.0, 4.54527855957069e-09, 2.8830760041473504e-10}},
     {{-4.768667855530117e-09, 0.0, 0.0, 0.0, 4.2869019302402954e-09, 9.34316565322398e-10, 0.0, 9.34316565322398e-10, -9.552208701949374e-09}},
     {{6.154472087384515e-09, 0.0, 0.0, 0.0, 7.401335149390389e-09, -4.54137053336379e-09, 0.0, -4.54137053336379e-09, -6.058978197762851e-10}}},
    {-7733542.321248103, 1661226.9024564207,
     {{0.0, -2.436351782150406e-09, 5.233478988323047e-10, -2.436351782150406e-09, 0.0, 0.0, 5.233478988323047e-10, 0.0, 0.0, -2.255049801992572e-09, 0.0, 0.0, 0.0, 2.1221206455492736e-09, -1.4628463998297806e-09, 0.0, -1.4628463998297806e-09, -4.373665877592982e-09, 4.844027797140833e-10, 0.0, 0.0, 0.0, -4.5584853101000335e-10, 3.142311366011326e-10, 0.0, 3.142311366011326e-10, 9.394985009974759e-10}},
     {{-4.687897014194115e-09, 0.0, 0.0, 0.0, -4.411558019357168e-09, 1.9943338345533426e-09, 0.0, 1.9943338345533426e-09, -6.532375496708098e-10}},
     {{1.0069978688197772e-09, 0.0, 0.0, 0.0, 3.0410296322179525e-09, 4.219466014630002e-09, 0.0, 4.219466014630002e-09, -1.9530709316371984e-09}}},
    {-8900977.931366349, -4729482.22503809,
     {{0.0, -1.343817364290289e-09, -7.140294456536018e-10, -1.343817364290289e-09, 0.0, 0.0, -7.140294456536018e-10, 0.0, 0.0, -1.265014352475798e-09, 0.0, 0.0, 0.0, 4.738348034810933e-10, 1.6373241733398981e-09, 0.0, 1.6373241733398981e-09, -1.7376587127814904e-09, -6.72157929228115e-10, 0.0, 0.0, 0.0, 2.517693334314607e-10, 8.699825608091956e-10, 0.0, 8.699825608091956e-10, -9.232947276862963e-10}},
     {{-2.607641273590686e-09, 0.0, 0.0, 0.0, -9.767408472503238e-10, -1.947044390558962e-09, 0.0, -1.947044390558962e-09, -1.7933412600657265e-09}},
     {{-1.3855548399084374e-09, 0.0, 0.0, 0.0, -3.3751032818661656e-09, 8.942934685148513e-10, 0.0, 8.942934685148513e-10, 1.9032364612238825e-09}}},
    {-4792583.046083494, -11916350.604162008,
     {{0.0, -3.4739579212886565e-10, -8.637701251313961e-10, -3.4739579212886565e-10, 0.0, 0.0, -8.637701251313961e-10, 0.0, 0.0, -3.3135692099698023e-10, 0.0, 0.0, 0.0, -5.357169237750492e-10, 3.551751010534727e-10, 0.0, 3.551751010534727e-10, 2.0454952784512278e-10, -8.238908345975144e-10, 0.0, 0.0, 0.0, -1.3320146206967582e-09, 8.831127159039148e-10, 0.0, 8.831127159039148e-10, 5.085950240779234e-10}},
     {{-6.78563188058792e-10, 0.0, 0.0, 0.0, 1.0970580683816745e-09, 1.00020143939744e-09, 0.0, 1.00020143939744e-09, -1.8084661642678648e-09}},
     {{-1.6871897217502309e-09, 0.0, 0.0, 0.0, -7.273388108653523e-10, -1.1136745800101335e-09, 0.0, -1.1136745800101335e-09, -1.041516983954287e-09}}},
    {5111313.367603637, -15548186.563229004,
     {{0.0, 1.7814272136688294e-10, -5.418952170393331e-10, 1.7814272136688294e-10, 0.0, 0.0, -5.418952170393331e-10, 0.0, 0.0, 1.7167193064335074e-10, 0.0, 0.0, 0.0, 2.9826894564345325e-10, 1.566156485304323e-10, 0.0, 1.566156485304323e-10, -1.2665686771738416e-10, -5.222116143827699e-10, 0.0, 0.0, 0.0, -9.073091159457248e-10, -4.764116670103361e-10, 0.0, -4.764116670103361e-10, 3.852795685089008e-10}},
     {{3.49754799292952e-10, 0.0, 0.0, 0.0, -6.076764840233187e-10, 7.647104626901199e-10, 0.0, 7.647104626901199e-10, 9.706145107798068e-10}},
     {{-1.063924764476157e-09, 0.0, 0.0, 0.0, -3.1907997138854634e-10, 6.14329068046041e-10, 0.0, 6.14329068046041e-10, -7.849470653152759e-10}}},
    {17745253.84907334, -10957631.464116944,
     {{0.0, 2.97705183635899e-10, -1.838318975307186e-10, 2.97705183635899e-10, 0.0, 0.0, -1.838318975307186e-10, 0.0, 0.0, 2.892021031862653e-10, 0.0, 0.0, 0.0, -5.3529080527761426e-11, 3.954291534370921e-10, 0.0, 3.954291534370921e-10, 3.426695844007861e-10, -1.785812754393536e-10, 0.0, 0.0, 0.0, 3.305401782499032e-11, -2.441761031081376e-10, 0.0, -2.441761031081376e-10, -2.1159725590637349e-10}},
     {{5.868456875089237e-10, 0.0, 0.0, 0.0, 1.086206141585438e-10, -4.347366399741359e-10, 0.0, -4.347366399741359e-10, 4.954794295166457e-10}},
     {{-3.6237513561210175e-10, 0.0, 0.0, 0.0, -8.02400435035573e-10, -9.993093775515231e-11, 0.0, -9.993093775515231e-11, 4.293707955415543e-10}}},
    {26290100.854685742, 3887746.1808568495,
     {{0.0, 2.124931062421127e-10, 3.142320627894972e-11, 2.124931062421127e-10, 0.0, 0.0, 3.142320627894972e-11, 0.0, 0.0, 2.07722778306147e-10, 0.0, 0.0, 0.0, -1.9895362968591095e-10, -9.155798440106634e-11, 0.0, -9.155798440106634e-11, 4.066493305270661e-10, 3.071777634100485e-11, 0.0, 0.0, 0.0, -2.942100596168497e-11, -1.3539476556201731e-11, 0.0, -1.3539476556201731e-11, 6.013477812211663e-11}},
     {{4.2018880708326784e-10, 0.0, 0.0, 0.0, 4.024502705206465e-10, 1.2236023910613737e-10, 0.0, 1.2236023910613737e-10, 2.738812059550583e-11}},
     {{6.213697843938138e-11, 0.0, 0.0, 0.0, 1.8520665166403683e-10, -3.9759809188871956e-10, 0.0, -3.9759809188871956e-10, -1.2164270519292125e-10}}},
    {22431347.23161927, 25370891.75624985,
     {{0.0, 8.740827086577824e-11, 9.886279927095317e-11, 8.740827086577824e-11, 0.0, 0.0, 9.886279927095317e-11, 0.0, 0.0, 8.58664886296403e-11, 0.0, 0.0, 0.0, 5.889941140111328e-11, -1.2935605319326677e-10, 0.0, -1.2935605319326677e-10, 2.6960217777321722e-11, 9.711897221407334e-11, 0.0, 0.0, 0.0, 6.661795993501728e-11, -1.463076822668915e-10, 0.0, -1.463076822668915e-10, 3.049325392231359e-11}},
     {{1.7326790004421323e-10, 0.0, 0.0, 0.0, -1.188516904578335e-10, 6.329883663067659e-11, 0.0, 6.329883663067659e-11, 2.952307153965714e-10}},
     {{1.9597401312828403e-10, 0.0, 0.0, 0.0, 2.610244351725829e-10, 1.2041417366501488e-10, 0.0, 1.2041417366501488e-10, -6.15315958175845e-11}}},
    {1034792.1666249004, 43141088.05043288,
     {{0.0, 1.945029283422762e-12, 8.108940353742392e-11, 1.945029283422762e-12, 0.0, 0.0, 8.108940353742392e-11, 0.0, 0.0, 1.9180798784073518e-12, 0.0, 0.0, 0.0, 3.859675484866731e-12, -1.3923299794326591e-13, 0.0, -1.3923299794326591e-13, -1.941689608367767e-12, 7.99658671480167e-11, 0.0, 0.0, 0.0, 1.6091211869319352e-10, -5.804704768289493e-12, 0.0, -5.804704768289493e-12, -8.095017053948065e-11}},
     {{3.863015159921726e-12, 0.0, 0.0, 0.0, -7.77339102415208e-12, -1.618983916511363e-10, 0.0, -1.618983916511363e-10, 1.169068231787687e-11}},
     {{1.610513516911368e-10, 0.0, 0.0, 0.0, 2.8041542371154524e-13, 7.800623751031345e-12, 0.0, 7.800623751031345e-12, 1.6303373989404356e-10}}},
    {-34406443.096949354, 42895607.36336285,
     {{0.0, -3.1208249551743206e-11, 3.890831770948496e-11, -3.1208249551743206e-11, 0.0, 0.0, 3.890831770948496e-11, 0.0, 0.0, -3.086865929216086e-11, 0.0, 0.0, 0.0, -2.5556087852920722e-11, -4.5530511511481976e-11, 0.0, -4.5530511511481976e-11, -5.311642572054694e-12, 3.8484939727680194e-11, 0.0, 0.0, 0.0, 3.1861587877408123e-11, 5.6764337404663925e-11, 0.0, 5.6764337404663925e-11, 6.622193801997013e-12}},
     {{-6.207597997671861e-11, 0.0, 0.0, 0.0, 5.1392552647858024e-11, 1.3743904809425028e-11, 0.0, 1.3743904809425028e-11, -1.1415143880312505e-10}},
     {{7.739209938889009e-11, 0.0, 0.0, 0.0, 9.156054022839495e-11, -5.173493969963865e-11, 0.0, -5.173493969963865e-11, -1.331703997779751e-11}}},
    {-68746636.17089179, 13562275.555329923,
     {{0.0, -3.010087639245762e-11, 5.938274260818132e-12, -3.010087639245762e-11, 0.0, 0.0, 5.938274260818132e-12, 0.0, 0.0, -2.984368442105793e-11, 0.0, 0.0, 0.0, 2.67276960299747e-11, -1.709851729323376e-11, 0.0, -1.709851729323376e-11, -5.657082870777457e-11, 5.887535656269245e-12, 0.0, 0.0, 0.0, -5.2728162235681394e-12, 3.3731803624829198e-12, 0.0, 3.3731803624829198e-12, 1.1160243032415626e-11}},
     {{-5.994400907025749e-11, 0.0, 0.0, 0.0, -5.368523640188972e-11, 2.246752445717944e-11, 0.0, 2.246752445717944e-11, -6.7753683289056406e-12}},
     {{1.182570106966562e-11, 0.0, 0.0, 0.0, 3.4344072978815704e-11, 5.34263844560096e-11, 0.0, 5.34263844560096e-11, -2.2416458374333836e-11}}},
    {100000000.0, 0.0,
     {{0.0, 1.5045135406218655e-11, 0.0, 1.5045135406218655e-11, 0.0, 0.0, 0.0, 0.0, 0.0, 1.4955e-11, 0.0, 0.0, 0.0, -1.5045135406218655e-11, 0.0, 0.0, 0.0, 3e-11, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}},
     {{3e-11, 0.0, 0.0, 0.0, 3.018081325219389e-11, 0.0, 0.0, 0.0, 0.0}},
     {{0.0, 0.0, 0.0, 0.0, 0.0, -3.009027081243731e-11, 0.0, -3.009027081243731e-11, 0.0}}},
    {-40674974.23535124, -106261919.16929826,
     {{0.0, -4.152974565621135e-12, -1.0849497901356786e-11, -4.152974565621135e-12, 0.0, 0.0, -1.0849497901356786e-11, 0.0, 0.0, -4.131103548559444e-12, 0.0, 0.0, 0.0, -6.6946471065178745e-12, 4.152256381951112e-12, 0.0, 4.152256381951112e-12, 2.5635724291384383e-12, -1.0792360649499846e-11, 0.0, 0.0, 0.0, -1.7489526743977688e-11, 1.084762167213901e-11, 0.0, 1.084762167213901e-11, 6.6972415194056724e-12}},
     {{-8.284049243000571e-12, 0.0, 0.0, 0.0, 1.342469043513673e-11, 1.3372529052771862e-11, 0.0, 1.3372529052771862e-11, -2.175259734962964e-11}},
     {{-2.1641783125928798e-11, 0.0, 0.0, 0.0, -8.326466749941707e-12, -1.344664821838737e-11, 0.0, -1.344664821838737e-11, -1.3429892978202174e-11}}},
    {47588909.93134091, -136955426.59331837,
     {{0.0, 2.3469358510094513e-12, -6.754212297064382e-12, 2.3469358510094513e-12, 0.0, 0.0, -6.754212297064382e-12, 0.0, 0.0, 2.3372336303354335e-12, 0.0, 0.0, 0.0, 3.926679843427859e-12, 2.1799394127913257e-12, 0.0, 2.1799394127913257e-12, -1.5894562611049226e-12, -6.726290418348738e-12, 0.0, 0.0, 0.0, -1.130053438559386e-11, -6.273615694437311e-12, 0.0, -6.273615694437311e-12, 4.574272884273057e-12}},
     {{4.684159433332388e-12, 0.0, 0.0, 0.0, -7.869643065006305e-12, 9.139505872445784e-12, 0.0, 9.139505872445784e-12, 1.2573247173404383e-11}},
     {{-1.3480473798385186e-11, 0.0, 0.0, 0.0, -4.368918721682981e-12, 7.87937547138548e-12, 0.0, 7.87937547138548e-12, -9.167514622160003e-12}}},
    {158809214.08511052, -94413162.4206063,
     {{0.0, 3.7834492183777475e-12, -2.2492864008090634e-12, 3.7834492183777475e-12, 0.0, 0.0, -2.2492864008090634e-12, 0.0, 0.0, 3.771172240343122e-12, 0.0, 0.0, 0.0, -8.226156935267005e-13, 4.980318771906917e-12, 0.0, 4.980318771906917e-12, 4.5937779582350405e-12, -2.241987653517259e-12, 0.0, 0.0, 0.0, 4.890506481636054e-13, -2.960833524851047e-12, 0.0, -2.960833524851047e-12, -2.731032371097854e-12}},
     {{7.554611483086087e-12, 0.0, 0.0, 0.0, 1.6479072204663354e-12, -5.478264899184933e-12, 0.0, -5.478264899184933e-12, 5.931298153677228e-12}},
     {{-4.491268123743312e-12, 0.0, 0.0, 0.0, -9.976837700803059e-12, -1.6356002830782668e-12, 0.0, -1.6356002830782668e-12, 5.470948340852888e-12}}},
    {232283274.74392882, 38351261.650418125,
     {{0.0, 2.6735522261620617e-12, 4.4141835469916465e-13, 2.6735522261620617e-12, 0.0, 0.0, 4.4141835469916465e-13, 0.0, 0.0, 2.666742885964439e-12, 0.0, 0.0, 0.0, -2.460893138050684e-12, -1.2880188881616602e-12, 0.0, -1.2880188881616602e-12, 5.127631682763207e-12, 4.402940947287745e-13, 0.0, 0.0, 0.0, -4.0630715549857764e-13, -2.126590881113775e-13, 0.0, -2.126590881113775e-13, 8.466005334624955e-13}},
     {{5.340290770874585e-12, 0.0, 0.0, 0.0, 4.9280659873169e-12, 1.6964878356727852e-12, 0.0, 1.6964878356727852e-12, 4.2586084003860674e-13}},
     {{8.817117326630826e-13, 0.0, 0.0, 0.0, 2.5793245450711144e-12, -4.9212436122855165e-12, 0.0, -4.9212436122855165e-12, -1.6953614235787835e-12}}},
    {194904802.25841418, 228061654.06882513,
     {{0.0, 1.0838883453365266e-12, 1.2682774667379889e-12, 1.0838883453365266e-12, 0.0, 0.0, 1.2682774667379889e-12, 0.0, 0.0, 1.0817216525341988e-12, 0.0, 0.0, 0.0, 7.940364888448136e-13, -1.604901840937371e-12, 0.0, -1.604901840937371e-12, 2.8768407980103985e-13, 1.2657421800819796e-12, 0.0, 0.0, 0.0, 9.291165376051305e-13, -1.87792483418134e-12, 0.0, -1.87792483418134e-12, 3.366243741993823e-13}},
     {{2.16560891398238e-12, 0.0, 0.0, 0.0, -1.5896626403299572e-12, 6.76461765097338e-13, 0.0, 6.76461765097338e-13, 3.759609277640321e-12}},
     {{2.5340183785425016e-12, 0.0, 0.0, 0.0, 3.2130166985733155e-12, 1.5918325869672676e-12, 0.0, 1.5918325869672676e-12, -6.739226710698344e-13}}},
}};

}  // namespace dgeo_test_fixture
