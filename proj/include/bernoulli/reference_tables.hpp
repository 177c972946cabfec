#ifndef BERNOULLI_REFERENCE_TABLES_HPP
#define BERNOULLI_REFERENCE_TABLES_HPP

// Reference tables transcribed from the published constants and exact
// sequences; the cross-check suites regenerate every entry. Exact
// values are kept as "p/q" strings.

#include <array>
#include <string_view>

namespace bernoulli::reference {

// Bernoulli constants beta_n, n = 0..20 (24 significant digits each).
inline constexpr std::array<double, 21> kBeta = {
    +1.00000000000000000000000e+00, -5.77215664901532860606512e-01, +1.45631690967353449721173e-01,
    +2.90710895786169554535912e-02, -8.21533768121338346464019e-03, -1.16268503273365002873409e-02,
    -4.75994290380637621052001e-03, +1.67138541801139726910695e-03, +4.21831653646200836859278e-03,
    +3.16911018422735558641847e-03, +3.43947744180880481779146e-04, -2.25866096399971274152095e-03,
    -3.24221327452684232007482e-03, -2.17454785736682251359552e-03, +3.84493292452642224040106e-04,
    +3.13813893088949918755710e-03, +4.53549848512386314628695e-03, +3.39484659125248617003234e-03,
    -4.72986667978530060590399e-04, -5.83999975483580370526234e-03, -1.00721090609471125811119e-02,
};

// Spot rows further out in the same table.
inline constexpr double kBeta30 = -2.21134553114167174032372e-01;
inline constexpr double kBeta40 = -2.07168737077169487591557e+01;
inline constexpr double kBeta50 = -6.29221938159892345466820e+03;

// "Bernoulli constants for some rational r" (Table 1), beta_r at v = 1.
struct BetaOfR {
    double r;
    double value;
};
inline constexpr std::array<BetaOfR, 11> kBetaOfR = {{
    {-1.0, -1.0967919991262275651322398023421657187190},
    {-0.5, 0.3000952439768656513643742483305378454480},
    {0.0, 1.0},
    {0.5, 0.2364079388130323148951169845913737350793},
    {1.0, -0.5772156649015328606065120900824024310421},
    {1.5, -0.4131520868458801199329318166967102536980},
    {2.0, 0.1456316909673534497211727517498026382754},
    {2.5, 0.2654200629584708272795102903586382709016},
    {3.0, 0.0290710895786169554535911581056375880771},
    {3.5, -0.0845272473711484887663180676975841853310},
    {4.0, -0.0082153376812133834646401861710135371428},
}};

// Seki numbers S_n and Euler zeta numbers Z_n, n = 0..30.
inline constexpr std::array<std::string_view, 31> kSeki = {
    "1", "1/2", "1/6", "3/56", "1/30", "25/992", "1/42", "427/16256", "1/30", "12465/261632",
    "5/66", "555731/4192256", "691/2730", "35135945/67100672", "7/6", "2990414715/1073709056",
    "3617/510", "329655706465/17179738112", "43867/798", "45692713833379/274877382656",
    "174611/330", "1111113564712575/628292059136", "854513/138", "1595024111042171723/70368735789056",
    "236364091/2730", "387863354088927172625/1125899873288192", "8553103/6",
    "110350957750914345093747/18014398375264256", "23749461029/870",
    "36315529600705266098580265/288230375614840832", "8615841276005/14322",
};

inline constexpr std::array<std::string_view, 31> kEulerZeta = {
    "1", "1", "1/2", "1/3", "5/24", "2/15", "61/720", "17/315", "277/8064", "62/2835",
    "50521/3628800", "1382/155925", "540553/95800320", "21844/6081075", "199360981/87178291200",
    "929569/638512875", "3878302429/4184557977600", "6404582/10854718875",
    "2404879675441/6402373705728000", "443861162/1856156927625", "14814847529501/97316080327065600",
    "18888466084/194896477400625", "69348874393137901/1124000727777607680000",
    "113927491862/2900518163668125", "238685140977801337/9545360026665222144000",
    "58870668456604/3698160658676859375", "4087072509293123892361/403291461126605635584000000",
    "8374643517010684/1298054391195577640625", "13181680435827682794403/3209350995912777478963200000",
    "689005380505609448/263505041412702261046875",
    "441543893249023104553682821/265252859812191058636308480000000",
};

// Integer family heads.
inline constexpr std::array<long long, 11> kGenocchi = {0, -1, -1, 0, 1, 0, -3, 0, 17, 0, -155};
inline constexpr std::array<long long, 9> kEuler = {1, 0, -1, 0, 5, 0, -61, 0, 1385};
inline constexpr std::array<long long, 8> kEulerTangent = {1, 1, 0, -2, 0, 16, 0, -272};
inline constexpr std::array<long long, 10> kAndre = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936};
inline constexpr std::array<std::string_view, 7> kCentralBernoulli = {"1", "0", "-1/3", "0", "7/15", "0", "-31/21"};
inline constexpr std::array<long long, 9> kExtendedEuler = {2, 1, -1, -2, 5, 16, -61, -272, 1385};
inline constexpr std::array<std::string_view, 9> kBernoulliSecant = {"0", "1/2", "0", "-3/56", "0", "25/992", "0", "-427/16256", "0"};
inline constexpr std::array<std::string_view, 9> kExtendedBernoulli = {"1", "1", "1/6", "-3/56", "-1/30", "25/992", "1/42", "-427/16256", "-1/30"};
inline constexpr std::array<long long, 7> kSpringer = {1, 1, 3, 11, 57, 361, 2763};

// Polynomial tables, ascending coefficients as exact strings.
// Swiss-knife K_n, n = 0..9.
inline const std::array<std::array<std::string_view, 10>, 10> kSwissKnifePoly = {{
    {"1"},
    {"0", "1"},
    {"-1", "0", "1"},
    {"0", "-3", "0", "1"},
    {"5", "0", "-6", "0", "1"},
    {"0", "25", "0", "-10", "0", "1"},
    {"-61", "0", "75", "0", "-15", "0", "1"},
    {"0", "-427", "0", "175", "0", "-21", "0", "1"},
    {"1385", "0", "-1708", "0", "350", "0", "-28", "0", "1"},
    {"0", "12465", "0", "-5124", "0", "630", "0", "-36", "0", "1"},
}};

// Central Bernoulli polynomials B^c_n, n = 0..9.
inline const std::array<std::array<std::string_view, 10>, 10> kCentralPoly = {{
    {"1"},
    {"0", "1"},
    {"-1/3", "0", "1"},
    {"0", "-1", "0", "1"},
    {"7/15", "0", "-2", "0", "1"},
    {"0", "7/3", "0", "-10/3", "0", "1"},
    {"-31/21", "0", "7", "0", "-5", "0", "1"},
    {"0", "-31/3", "0", "49/3", "0", "-7", "0", "1"},
    {"127/15", "0", "-124/3", "0", "98/3", "0", "-28/3", "0", "1"},
    {"0", "381/5", "0", "-124", "0", "294/5", "0", "-12", "0", "1"},
}};

// Genocchi polynomials G_n, n = 0..8.
inline const std::array<std::array<std::string_view, 9>, 9> kGenocchiPoly = {{
    {"0"},
    {"-1"},
    {"1", "-2"},
    {"0", "3", "-3"},
    {"-1", "0", "6", "-4"},
    {"0", "-5", "0", "10", "-5"},
    {"3", "0", "-15", "0", "15", "-6"},
    {"0", "21", "0", "-35", "0", "21", "-7"},
    {"-17", "0", "84", "0", "-70", "0", "28", "-8"},
}};

}  // namespace bernoulli::reference

#endif
