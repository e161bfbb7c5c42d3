#pragma once

#include <string>
#include <vector>

// Published polar multiplicity and Euler characteristic tables, transcribed
// row by row as printed. Entries a table does not list are zero; entries
// marked as not computed are omitted.

namespace reference {

struct PolarRow {
  int m;
  int n;
  int r;
  std::vector<std::string> values;
};

/// Rows e_{m,n}^{r,k}, k ascending. Rows printed right to left (rank m-r
/// read against the rank r columns) are stored reversed under their own r.
inline const std::vector<PolarRow>& polar_rows() {
  static const std::vector<PolarRow> rows{
      {2, 2, 1, {"2", "2", "2"}},
      {2, 3, 1, {"3", "4", "3"}},
      {2, 4, 1, {"4", "6", "4"}},
      {2, 5, 1, {"5", "8", "5"}},
      {2, 6, 1, {"6", "10", "6"}},
      {2, 7, 1, {"7", "12", "7"}},
      {3, 3, 1, {"6", "12", "12", "6", "3"}},
      {3, 3, 2, {"3", "6", "12", "12", "3"}},
      {3, 4, 1, {"10", "24", "27", "16", "6"}},
      {3, 4, 2, {"6", "16", "27", "24", "10"}},
      {3, 5, 1, {"15", "40", "48", "30", "10"}},
      {3, 5, 2, {"10", "30", "48", "40", "15"}},
      {3, 6, 1, {"21", "60", "75", "48", "15"}},
      {3, 6, 2, {"15", "48", "75", "60", "21"}},
      {3, 7, 1, {"28", "84", "108", "70", "21"}},
      {3, 7, 2, {"21", "70", "108", "84", "28"}},
      {3, 8, 1, {"36", "112", "147", "96", "28"}},
      {3, 8, 2, {"28", "96", "147", "112", "36"}},
      {3, 9, 1, {"45", "144", "192", "126", "36"}},
      {3, 9, 2, {"36", "126", "192", "144", "45"}},
      {3, 10, 1, {"55", "180", "243", "160", "45"}},
      {3, 10, 2, {"45", "160", "243", "180", "55"}},
      {3, 11, 1, {"66", "220", "300", "198", "55"}},
      {3, 11, 2, {"55", "198", "300", "220", "66"}},
      {3, 12, 1, {"78", "264", "363", "240", "66"}},
      {3, 12, 2, {"66", "240", "363", "264", "78"}},
      {3, 13, 1, {"91", "312", "432", "286", "78"}},
      {3, 13, 2, {"78", "286", "432", "312", "91"}},
      {3, 14, 1, {"105", "364", "507", "336", "91"}},
      {3, 14, 2, {"91", "336", "507", "364", "105"}},
      {3, 15, 1, {"120", "420", "588", "390", "105"}},
      {3, 15, 2, {"105", "390", "588", "420", "120"}},
      {3, 16, 1, {"136", "480", "675", "448", "120"}},
      {3, 16, 2, {"120", "448", "675", "480", "136"}},
      {3, 17, 1, {"153", "544", "768", "510", "136"}},
      {3, 17, 2, {"136", "510", "768", "554", "153"}},
      {3, 18, 1, {"171", "612", "867", "576", "153"}},
      {3, 18, 2, {"153", "576", "876", "612", "171"}},
      {3, 19, 1, {"190", "684", "972", "646", "171"}},
      {3, 19, 2, {"171", "646", "972", "684", "190"}},
      {3, 20, 1, {"210", "760", "1083", "720", "190"}},
      {3, 20, 2, {"190", "720", "1038", "760", "210"}},
      {4, 4, 2, {"20", "80", "176", "256", "286", "256", "176", "80", "20"}},
      {4, 4, 1, {"20", "60", "84", "68", "36", "12", "4"}},
      {4, 4, 3, {"4", "12", "36", "68", "84", "60", "20"}},
      {4, 5, 2, {"50", "240", "595", "960", "1116", "960", "595", "240", "50"}},
      {4, 5, 1, {"35", "120", "190", "176", "105", "40", "10"}},
      {4, 5, 3, {"10", "40", "105", "176", "190", "120", "35"}},
      {4, 6, 2, {"105", "560", "1488", "2520", "2980", "2520", "1488", "560", "105"}},
      {4, 6, 1, {"56", "210", "360", "360", "228", "90", "20"}},
      {4, 6, 3, {"20", "90", "228", "360", "360", "210", "56"}},
      {4, 7, 2, {"196", "1120", "3115", "5432", "6488", "5432", "3115", "1120", "196"}},
      {4, 7, 1, {"84", "336", "609", "640", "420", "168", "35"}},
      {4, 7, 3, {"35", "168", "420", "640", "609", "336", "84"}},
      {4, 8, 2, {"336", "2016", "5792", "10304", "12390", "10304", "5792", "2016", "336"}},
      {4, 8, 1, {"120", "504", "952", "1036", "696", "280", "56"}},
      {4, 8, 3, {"56", "280", "696", "1036", "952", "504", "120"}},
      {4, 9, 2, {"540", "3360", "9891", "17856", "21576", "17856", "9891", "3360", "540"}},
      {4, 9, 1, {"165", "720", "1404", "1568", "1071", "432", "84"}},
      {4, 9, 3, {"84", "432", "1071", "1568", "1404", "720", "165"}},
      {4, 10, 2, {"825", "5280", "15840", "28920", "35076", "28920", "15840", "5280", "825"}},
      {4, 10, 1, {"220", "990", "1980", "2256", "1560", "630", "120"}},
      {4, 10, 3, {"120", "630", "1560", "2256", "1980", "990", "220"}},
      {4, 11, 2, {"1210", "7920", "24123", "44440", "54060", "44440", "24123", "7920", "1210"}},
      {4, 11, 1, {"286", "1320", "2695", "3120", "2178", "880", "165"}},
      {4, 11, 3, {"165", "880", "2178", "3120", "2695", "1320", "286"}},
      {4, 12, 2, {"1716", "11440", "35280", "65472", "79838", "65472", "35280", "11440", "1716"}},
      {4, 12, 1, {"364", "1716", "3564", "4180", "2940", "1188", "220"}},
      {4, 12, 3, {"220", "1188", "2940", "4180", "3564", "1716", "364"}},
      {4, 13, 1, {"455", "2184", "4602", "5456", "3861", "1560", "286"}},
      {4, 13, 3, {"286", "1560", "3861", "5456", "4602", "2184", "455"}},
      {4, 14, 1, {"560", "2730", "5824", "6968", "4956", "2002", "364"}},
      {4, 14, 3, {"364", "2002", "4956", "6968", "5824", "2730", "560"}},
      {4, 15, 1, {"680", "3360", "7245", "8736", "6240", "2520", "455"}},
      {4, 15, 3, {"455", "2520", "6240", "8736", "7245", "3360", "680"}},
      {4, 16, 1, {"816", "4080", "8880", "10780", "7728", "3120", "560"}},
      {4, 16, 3, {"560", "3120", "7728", "10780", "8880", "4080", "816"}},
      {4, 17, 1, {"969", "4896", "10744", "13120", "9435", "3808", "680"}},
      {4, 17, 3, {"680", "3808", "9435", "13120", "10744", "4896", "969"}},
      {4, 18, 1, {"1140", "5814", "12852", "15776", "11376", "4590", "816"}},
      {4, 18, 3, {"816", "4590", "11376", "15776", "12852", "5814", "1140"}},
      {4, 19, 1, {"1330", "6840", "15219", "18768", "13566", "5472", "969"}},
      {4, 19, 3, {"969", "5472", "13566", "18768", "15219", "6840", "1330"}},
      {4, 20, 1, {"1540", "7980", "17860", "22116", "16020", "6460", "1140"}},
      {4, 20, 3, {"1140", "6460", "16020", "22116", "17860", "7980", "1540"}},
      {4, 21, 1, {"1771", "9240", "20790", "25840", "18753", "7560", "1330"}},
      {4, 21, 3, {"1330", "7560", "18753", "25840", "20790", "9240", "1771"}},
      {4, 22, 1, {"2024", "10626", "24024", "29960", "21780", "8778", "1540"}},
      {4, 22, 3, {"1540", "8778", "21780", "29960", "24024", "10626", "2024"}},
      {4, 23, 1, {"2300", "12144", "27577", "34496", "25116", "10120", "1771"}},
      {4, 23, 3, {"1771", "10120", "25116", "34496", "27577", "12144", "2300"}},
      {4, 24, 1, {"2600", "13800", "31464", "39468", "28776", "11592", "2024"}},
      {4, 24, 3, {"2024", "11592", "28776", "39468", "31464", "13800", "2600"}},
      {5, 5, 2, {"175", "1050", "3180", "6320", "9180", "10320", "9360", "7080", "4545", "2430", "1020", "300", "50"}},
      {5, 5, 3, {"50", "300", "1020", "2430", "4545", "7080", "9360", "10320", "9180", "6320", "3180", "1050", "175"}},
      {5, 6, 2, {"490", "3360", "11445", "25396", "40890", "50520", "49495", "39120", "24981", "12640", "4830", "1260", "175"}},
      {5, 6, 3, {"175", "1260", "4830", "12640", "24981", "39120", "49495", "50520", "40890", "25396", "11445", "3360", "490"}},
      {5, 7, 2, {"1176", "8820", "32480", "77280", "132300", "172074", "175080", "141120", "89880", "44310", "16128", "3920", "490"}},
      {5, 7, 3, {"490", "3920", "16128", "44310", "89880", "141120", "175080", "172074", "132300", "77280", "32480", "8820", "1176"}},
      {5, 8, 2, {"2520", "20160", "78498", "196080", "349860", "470400", "489930", "399504", "253980", "123200", "43470", "10080", "1176"}},
      {5, 8, 3, {"1176", "10080", "43470", "123200", "253980", "399504", "489930", "470400", "349860", "196080", "78498", "20160", "2520"}},
      {5, 9, 2, {"4950", "41580", "168840", "437220", "803916", "1106640", "1171360", "962640", "611100", "293076", "101160", "22680", "2520"}},
      {5, 9, 3, {"2520", "22680", "101160", "293076", "611100", "962640", "1171360", "1106640", "803916", "437220", "168840", "41580", "4950"}},
      {5, 10, 2, {"9075", "79200", "332310", "884840", "1664685", "2332440", "2498535", "2064960", "1309290", "622560", "211365", "46200", "4950"}},
      {5, 10, 3, {"4950", "46200", "211365", "622560", "1309290", "2064960", "2498535", "2332440", "1664685", "884840", "332310", "79200", "9075"}},
      {5, 11, 2, {"15730", "141570", "609840", "1660296", "3180705", "4518690", "4885440", "4055040", "2568456", "1213080", "406560", "87120", "9075"}},
      {5, 11, 3, {"9075", "87120", "406560", "1213080", "2568456", "4055040", "4885440", "4518690", "3180705", "1660296", "609840", "141570", "15730"}},
      {5, 12, 2, {"26026", "240240", "1057485", "2931760", "5699760", "8188224", "8918470", "7427640", "4700460", "2207920", "732303", "154440", "15730"}},
      {5, 12, 3, {"15730", "154440", "732303", "2207920", "4700460", "7427640", "8918470", "8188224", "5699760", "2931760", "1057485", "240240", "26026"}},
      {5, 5, 1, {"70", "280", "520", "580", "430", "220", "80", "20", "5"}},
      {5, 5, 4, {"5", "20", "80", "220", "430", "580", "520", "280", "70"}},
      {5, 6, 1, {"126", "560", "1155", "1440", "1200", "696", "285", "80", "15"}},
      {5, 6, 4, {"15", "80", "285", "696", "1200", "1440", "1155", "560", "126"}},
      {5, 7, 1, {"210", "1008", "2240", "3010", "2700", "1680", "728", "210", "35"}},
      {5, 7, 4, {"35", "210", "728", "1680", "2700", "3010", "2240", "1008", "210"}},
      {5, 8, 1, {"330", "1680", "3948", "5600", "5285", "3440", "1540", "448", "70"}},
      {5, 8, 4, {"70", "448", "1540", "3440", "5285", "5600", "3948", "1680", "330"}},
      {5, 9, 1, {"495", "2640", "6480", "9576", "9380", "6300", "2880", "840", "126"}},
      {5, 9, 4, {"126", "840", "2880", "6300", "9380", "9576", "6480", "2640", "495"}},
      {5, 10, 1, {"715", "3960", "10065", "15360", "15480", "10640", "4935", "1440", "210"}},
      {5, 10, 4, {"210", "1440", "4935", "10640", "15480", "15360", "10065", "3960", "715"}},
      {5, 11, 1, {"1001", "5720", "14960", "23430", "24150", "16896", "7920", "2310", "330"}},
      {5, 11, 4, {"330", "2310", "7920", "16896", "24150", "23430", "14960", "5720", "1001"}},
      {5, 12, 1, {"1365", "8008", "21450", "34320", "36025", "25560", "12078", "3520", "495"}},
      {5, 12, 4, {"495", "3520", "12078", "25560", "36025", "34320", "21450", "8008", "1365"}},
      {5, 13, 1, {"1820", "10920", "29848", "48620", "51810", "37180", "17680", "5148", "715"}},
      {5, 13, 4, {"715", "5148", "17680", "37180", "51810", "48620", "29848", "10920", "1820"}},
      {5, 14, 1, {"2380", "14560", "40495", "66976", "72280", "52360", "25025", "7280", "1001"}},
      {5, 14, 4, {"1001", "7280", "25025", "52360", "72280", "66976", "40495", "14560", "2380"}},
      {5, 15, 1, {"3060", "19040", "53760", "90090", "98280", "71760", "34440", "10010", "1365"}},
      {5, 15, 4, {"1365", "10010", "34440", "71760", "98280", "90090", "53760", "19040", "3060"}},
      {5, 16, 1, {"3876", "24480", "70040", "118720", "130725", "96096", "46280", "13440", "1820"}},
      {5, 16, 4, {"1820", "13440", "46280", "96096", "130725", "118720", "70040", "24480", "3876"}},
      {5, 17, 1, {"4845", "31008", "89760", "153680", "170600", "126140", "60928", "17680", "2380"}},
      {5, 17, 4, {"2380", "17680", "60928", "126140", "170600", "153680", "89760", "31008", "4845"}},
      {5, 18, 1, {"5985", "38760", "113373", "195840", "218960", "162720", "78795", "22848", "3060"}},
      {5, 18, 4, {"3060", "22848", "78795", "162720", "218960", "195840", "113373", "38760", "5985"}},
      {5, 19, 1, {"7315", "47880", "141360", "246126", "276930", "206720", "100320", "29070", "3876"}},
      {5, 19, 4, {"3876", "29070", "100320", "206720", "276930", "246126", "141360", "47880", "7315"}},
      {5, 20, 1, {"8855", "58520", "174230", "305520", "345705", "259080", "125970", "36480", "4845"}},
      {5, 20, 4, {"4845", "36480", "125970", "259080", "345705", "305520", "174230", "58520", "8855"}},
  };
  return rows;
}

/// e_{m,m+1}^{m-1,k} for k = 0..19, m = 1..10.
inline const std::vector<std::vector<std::string>>& hilbert_burch_rows() {
  static const std::vector<std::vector<std::string>> rows{
      {"1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
      {"3", "4", "3", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
      {"6", "16", "27", "24", "10", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
      {"10", "40", "105", "176", "190", "120", "35", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
      {"15", "80", "285", "696", "1200", "1440", "1155", "560", "126", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
      {"21", "140", "630", "2016", "4760", "8352", "10815", "10080", "6426", "2520", "462", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
      {"28", "224", "1218", "4816", "14420", "33216", "59143", "80976", "83916", "63840", "33726", "11088", "1716", "0", "0", "0", "0", "0", "0", "0"},
      {"36", "336", "2142", "10080", "36540", "104112", "235557", "424384", "606564", "680400", "587202", "376992", "169884", "48048", "6435", "0", "0", "0", "0", "0"},
      {"45", "480", "3510", "19152", "81480", "276480", "758205", "1691920", "3077838", "4551840", "5430810", "5155920", "3809520", "2114112", "830115", "205920", "24310", "0", "0", "0"},
      {"55", "660", "5445", "33792", "165000", "649440", "2091705", "5563360", "12278970", "22518200", "34240800", "42926400", "43929600", "36132096", "23326875", "11394240", "3962530", "875160", "92378", "0"},
  };
  return rows;
}

/// chi of the d-dimensional smooth complex link of M_{m,m+1}^m; row d = 0..3,
/// column m = 1..10.
inline const std::vector<std::vector<long>>& hilbert_burch_chi() {
  static const std::vector<std::vector<long>> rows{
      {1, 3, 6, 10, 15, 21, 28, 36, 45, 55},
      {0, -1, -10, -30, -65, -119, -196, -300, -435, -605},
      {0, 2, 17, 75, 220, 511, 1022, 1842, 3075, 4840},
      {0, 2, -7, -101, -476, -1505, -3794, -9138, -16077, -28952},
  };
  return rows;
}

}  // namespace reference
