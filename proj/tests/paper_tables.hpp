// Reference rows for the five numeric tables, kept as printed strings so each
// cell carries its own precision (tolerance = one unit in the last decimal).
#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstring>

namespace tables {

struct CanonicalRow {
  std::int64_t p;
  std::int64_t A;
  std::int64_t B;
  const char* theta;
  const char* c[6];  // re0, im0, re1, im1, re2, im2
  const char* scal;
};

// First canonical solution, 19 primes.
inline const CanonicalRow kTable1[] = {
    {7, 1, 1, "0.4602", {"-0.9010", "-0.4339", "0.6235", "0.7818", "-0.2225", "0.9749"}, "1.1235"},
    {13, -5, 1, "0.7790", {"-0.4822", "-0.8761", "0.3953", "0.9185", "-0.8132", "0.5820"}, "0.7132"},
    {19, 7, 1, "0.2129", {"-0.9528", "-0.3037", "0.9838", "-0.1791", "0.3780", "0.9258"}, "0.7061"},
    {31, 4, 2, "0.4011", {"-0.8023", "-0.5969", "0.9923", "0.1235", "-0.0963", "0.9954"}, "0.5274"},
    {37, -11, 1, "0.9001", {"-0.0604", "-0.9982", "0.4630", "0.8863", "-0.9452", "0.3265"}, "0.4127"},
    {43, -8, 2, "0.7423", {"-0.3124", "-0.9499", "0.7272", "0.6864", "-0.7742", "0.6330"}, "0.3792"},
    {61, 1, 3, "0.5022", {"-0.6466", "-0.7628", "0.9759", "0.2181", "-0.3560", "0.9345"}, "0.3564"},
    {67, -5, 3, "0.6271", {"-0.4569", "-0.8895", "0.8964", "0.4433", "-0.5999", "0.8001"}, "0.3170"},
    {73, 7, 3, "0.3829", {"-0.7843", "-0.6204", "0.9988", "-0.0481", "-0.1114", "0.9938"}, "0.3409"},
    {79, -17, 1, "0.9483", {"0.1286", "-0.9917", "0.4824", "0.8759", "-0.9765", "0.2154"}, "0.3066"},
    {97, 19, 1, "0.0890", {"-0.9875", "-0.1576", "0.7708", "-0.6371", "0.4823", "0.8760"}, "0.3137"},
    {103, 13, 3, "0.2919", {"-0.8668", "-0.4986", "0.9629", "-0.2697", "0.0653", "0.9979"}, "0.2937"},
    {109, -2, 4, "0.5556", {"-0.5387", "-0.8425", "0.9666", "0.2561", "-0.4841", "0.8750"}, "0.2562"},
    {127, -20, 2, "0.8875", {"0.0580", "-0.9983", "0.6211", "0.7837", "-0.9411", "0.3382"}, "0.2464"},
    {139, -23, 1, "0.9731", {"0.2257", "-0.9742", "0.4899", "0.8718", "-0.9873", "0.1588"}, "0.2387"},
    {151, 19, 3, "0.2290", {"-0.9138", "-0.4062", "0.9066", "-0.4219", "0.1770", "0.9842"}, "0.2452"},
    {157, -14, 4, "0.7212", {"-0.2380", "-0.9713", "0.8495", "0.5276", "-0.7655", "0.6434"}, "0.2146"},
    {163, 25, 1, "0.0683", {"-0.9922", "-0.1248", "0.7153", "-0.6988", "0.4898", "0.8718"}, "0.2411"},
    {181, 7, 5, "0.4359", {"-0.6932", "-0.7207", "0.9996", "-0.0270", "-0.2649", "0.9643"}, "0.2092"},
};

// Second canonical solution.
inline const CanonicalRow kTable2[] = {
    {7, 1, 1, "0.4602", {"0.8173", "0.5762", "-0.3890", "0.9212", "0.2804", "-0.9599"}, "0.7129"},
    {13, -5, 1, "0.7790", {"0.2469", "0.9690", "-0.7728", "0.6346", "0.6315", "-0.7754"}, "0.9242"},
    {19, 7, 1, "0.2129", {"0.9520", "0.3061", "-0.4274", "0.9041", "0.0041", "-1.0000"}, "0.4058"},
    {31, 4, 2, "0.4011", {"0.8025", "0.5967", "-0.6855", "0.7281", "0.2171", "-0.9761"}, "0.3844"},
    {37, -11, 1, "0.9001", {"-0.2907", "0.9568", "-0.9939", "-0.1106", "0.8980", "-0.4399"}, "0.6830"},
    {43, -8, 2, "0.7423", {"0.1847", "0.9828", "-0.9804", "0.1971", "0.7022", "-0.7120"}, "0.5126"},
    {61, 1, 3, "0.5022", {"0.6436", "0.7653", "-0.8671", "0.4982", "0.3730", "-0.9278"}, "0.3232"},
    {67, -5, 3, "0.6271", {"0.4178", "0.9085", "-0.9589", "0.2837", "0.5632", "-0.8263"}, "0.3571"},
    {73, 7, 3, "0.3829", {"0.7932", "0.6089", "-0.7822", "0.6231", "0.1987", "-0.9801"}, "0.2661"},
    {79, -17, 1, "0.9483", {"-0.4295", "0.9031", "-0.8761", "-0.4821", "0.9657", "-0.2596"}, "0.4408"},
    {97, 19, 1, "0.0890", {"0.9887", "0.1498", "-0.4791", "0.8778", "-0.2383", "-0.9712"}, "0.2383"},
    {103, 13, 3, "0.2919", {"0.8757", "0.4828", "-0.7239", "0.6899", "0.0609", "-0.9981"}, "0.2327"},
    {109, -2, 4, "0.5556", {"0.5288", "0.8487", "-0.9508", "0.3097", "0.4751", "-0.8799"}, "0.2600"},
    {127, -20, 2, "0.8875", {"-0.2473", "0.9689", "-0.9083", "-0.4183", "0.9253", "-0.3794"}, "0.3193"},
    {139, -23, 1, "0.9731", {"-0.4663", "0.8846", "-0.7821", "-0.6231", "0.9836", "-0.1804"}, "0.3135"},
    {151, 19, 3, "0.2290", {"0.9203", "0.3913", "-0.6848", "0.7287", "-0.0415", "-0.9991"}, "0.1997"},
    {157, -14, 4, "0.7212", {"0.1708", "0.9853", "-0.9969", "-0.0789", "0.7371", "-0.6757"}, "0.2520"},
    {163, 25, 1, "0.0683", {"0.9929", "0.1190", "-0.4865", "0.8737", "-0.2912", "-0.9567"}, "0.1941"},
    {181, 7, 5, "0.4359", {"0.7010", "0.7132", "-0.9002", "0.4355", "0.2959", "-0.9552"}, "0.1824"},
};

struct ThirdRow {
  std::int64_t p;
  const char* theta;  // as printed; the p=151 cell is a known misprint (0.2209 for 0.2290)
  const char* c[3];
  const char* ratio[3];
};

inline const ThirdRow kTable3[] = {
    {7, "0.4602", {"-1.2221", "9.4127", "2.7389"}, {"-0.4619", "3.5577", "1.0352"}},
    {13, "0.7790", {"-1.4201", "-14.6415", "2.1601"}, {"-0.3939", "-4.0608", "0.5991"}},
    {19, "0.2129", {"-2.2521", "8.4655", "4.8488"}, {"-0.5167", "1.9421", "1.112"}},
    {31, "0.4011", {"-2.8168", "17.2938", "4.6888"}, {"-0.5059", "3.1061", "0.8421"}},
    {37, "0.9001", {"-3.0328", "-7.1015", "2.8445"}, {"-0.4986", "-1.1675", "0.4676"}},
    {43, "0.7423", {"-3.2558", "-20.3776", "3.6527"}, {"-0.4965", "-3.1075", "0.557"}},
    {61, "0.5022", {"-4.0014", "50.9574", "5.4586"}, {"-0.5123", "6.5244", "0.6989"}},
    {67, "0.6271", {"-4.2289", "-95.9688", "5.0005"}, {"-0.5166", "-11.7245", "0.6109"}},
    {73, "0.3829", {"-4.4100", "25.6091", "6.6407"}, {"-0.5162", "2.9973", "0.7772"}},
    {79, "0.9483", {"-5.6126", "-8.9422", "4.1623"}, {"-0.6315", "-1.0061", "0.4683"}},
    {97, "0.0890", {"-5.0982", "13.5365", "10.4124"}, {"-0.5176", "1.3744", "1.0572"}},
    {103, "0.2919", {"-5.2556", "21.9500", "8.4142"}, {"-0.5179", "2.1628", "0.8291"}},
    {109, "0.5556", {"-5.5068", "337.8101", "6.6180"}, {"-0.5275", "32.3563", "0.6339"}},
    {127, "0.8875", {"-7.1148", "-14.4873", "5.5161"}, {"-0.6313", "-1.2855", "0.4895"}},
    {139, "0.9731", {"-8.4417", "-11.5986", "5.6060"}, {"-0.7160", "-0.9838", "0.4755"}},
    {151, "0.2209", {"-6.3543", "22.1314", "10.5843"}, {"-0.5171", "1.8010", "0.8613"}},
    {157, "0.7212", {"-7.1235", "-36.5459", "6.8056"}, {"-0.5685", "-2.9167", "0.5431"}},
    {163, "0.0683", {"-6.5753", "16.4057", "13.3294"}, {"-0.5150", "1.2850", "1.0440"}},
    {181, "0.4359", {"-7.0841", "58.2887", "9.2448"}, {"-0.5266", "4.3326", "0.6872"}},
};

struct LargeRow {
  std::int64_t p;
  std::int64_t A;
  std::int64_t B;
  const char* theta;
  const char* arg_c0_1;
  const char* two_theta_minus_pi;
  const char* arg_c0_2;
  const char* two_theta;
  const char* scal;
};

inline const LargeRow kTable4[] = {
    {1003273, 973, 337, "0.354542", "-2.43320", "-2.43251", "0.70803", "0.709084", "0.002810"},
    // the theta cell of this row is printed as 0.033775; recomputation gives 0.033778
    {1003279, 1993, 39, "0.033775", "-3.07411", "-3.07404", "0.06742", "0.067555", "0.002995"},
    {100205473, 9733, 3367, "0.354372", "-2.43292", "-2.43285", "0.70864", "0.708744", "0.000281"},
};

struct HugeRow {
  std::int64_t p;
  std::int64_t A;
  std::int64_t B;
  const char* theta;
  const char* ratio[3];
};

inline const HugeRow kTable5[] = {
    {67521601729, -2, 100016, "0.523600", {"-0.577349", "779550.5", "0.577353"}},
    {67544557351, 1, 100033, "0.523598", {"-0.577347", "194920.0", "0.577353"}},
    {250004500027, 1000009, 1, "0.000002", {"-0.500000", "1.000007", "1.000001"}},
    {250018500349, -1000037, 1, "1.047196", {"-0.999995", "-0.999997", "0.500000"}},
};

inline int printed_decimals(const char* s) {
  const char* dot = std::strchr(s, '.');
  return dot ? static_cast<int>(std::strlen(dot + 1)) : 0;
}

/// |computed - printed| <= one unit in the last printed decimal.
inline bool matches_printed(double computed, const char* printed) {
  const double v = std::atof(printed);
  const double tol = std::pow(10.0, -printed_decimals(printed)) + 1e-12;
  return std::fabs(computed - v) <= tol;
}

}  // namespace tables
