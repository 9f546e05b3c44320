// Reference values for Tables I-VIII. Table I, n = 1 stores the two P_3
// columns by meaning (the source labels are interchanged there).
#include "lcong/tables.hpp"

#include <algorithm>

namespace lcong {

const std::vector<TableRowFixture>& table_rows() {
  static const std::vector<TableRowFixture> rows = {
      {"5w4", 1, 2, "-2^5*5^3*7*13", "1", "2*5^2/3", "2^4*3^6*5^2", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 3, "-2^4*5^4*13*41", "1", "2*5/3", "3^10*5^2", "2+O(3)", "2+O(3)", false},
      {"5w4", 1, 5, "2^5*3*5^2*13*17", "1", "0", "3^6*5^4", "0", "2*3^1+O(3^2)", false},
      {"5w4", 1, 6, "-2^5*5^3*13*1801", "1", "2*5^2/3", "2^4*3^10*5^2", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 7, "-2^8*5^3*13*23*41/7", "1", "2^3*5^5/(3*7^2)", "3^6*5^2*7^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 1, 10, "2^3*3*5^3*13", "2*5/3", "0", "2^4*3^2*5^4", "0", "1*3^1+O(3^2)", false},
      {"5w4", 1, 11, "-2^10*5^3*13*2311/11", "1", "2^5*5^3*41/(3*11^2)", "3^6*5^2*11^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 12, "-2^6*5^3*13*839", "1", "2*5^2/3", "2^4*3^10*5^2", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 13, "-2^4*5^3*11*13*43*53", "1", "2^5*5^3*11^2/(3*13^2)", "3^6*5^2*13^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 1, 14, "-2^5*5^4*13^2*251", "1", "2^3*5^6/(3*7^2)", "2^4*3^6*5^2*7^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 15, "2^9*3*5^2*13*281", "1", "0", "3^10*5^4", "0", "2*3^1+O(3^2)", false},
      {"5w4", 1, 17, "-2^4*5^3*13*31*167/17", "2*5/3", "2^6*5^2*7*83/(3*17^2)", "3^2*5^2*17^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 19, "-2^4*5^4*13*43^2/19", "2*5/3", "2^7*5^3*7^2/(3*19^2)", "3^2*5^2*19^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 1, 20, "2^3*3*5^2*13^2*97", "1", "0", "2^4*3^6*5^4", "0", "1*3^1+O(3^2)", false},
      {"5w4", 1, 21, "-2^4*5^3*13*3425341/7", "1", "2^3*5^5/(3*7^2)", "3^10*5^2*7^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 1, 22, "-2^6*5^3*13*43*13841/11", "1", "2^5*5^4*41/(3*11^2)", "2^4*3^6*5^2*11^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 1, 23, "-2^8*3^5*5^3*13*1409/23", "1", "2^3*3^2*5^2*7*79/23^2", "3^6*5^2*23^4", "1*3^3+O(3^4)", "2*3^5+O(3^6)", false},
      {"5w4", 1, 26, "-2^5*5^3*13*887", "2*5/3", "2^5*5^4*11^2/(3*13^2)", "2^4*3^2*5^2*13^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 28, "-2^5*5^3*13*503/7", "2*5/3", "2^3*5^6/(3*7^2)", "2^4*3^2*5^2*7^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 29, "-2^4*5^3*11*13*1678031/29", "1", "2^6*5^3*23*41/(3*29^2)", "3^6*5^2*29^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 30, "2^3*3*5^2*7^2*13*61*97", "1", "0", "2^4*3^10*5^4", "0", "1*3^1+O(3^2)", false},
      {"5w4", 1, 31, "-2^4*5^4*13*79*62351/31", "1", "2^5*5^5*11^2/(3*31^2)", "3^6*5^2*31^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 1, 33, "-2^4*5^4*11*13*19*2879", "1", "2^5*5^3*41/(3*11^2)", "3^10*5^2*11^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 34, "-2^7*5^3*13*142427", "1", "2^6*5^3*7*83/(3*17^2)", "2^4*3^6*5^2*17^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 1, 35, "2^6*3*5^2*13*653/7", "2*5/3", "0", "3^2*5^4*7^4", "0", "2*3^1+O(3^2)", false},
      {"5w4", 1, 37, "-2^8*3^2*5^4*13*367/37", "2*5/3", "2^5*3*5^3*19^2/37^2", "3^2*5^2*37^4", "2*3^2+O(3^3)", "2*3^2+O(3^3)", false},
      {"5w4", 1, 39, "-2^10*5^3*71*17489", "1", "2^5*5^3*11^2/(3*13^2)", "3^10*5^2*13^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 1, 41, "-2^4*5^3*13*17*31*211*941/41", "1", "2^7*5^3*17*109/(3*41^2)", "3^6*5^2*41^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 42, "-2^5*5^3*13*19*859*1801/7", "1", "2^3*5^6/(3*7^2)", "2^4*3^10*5^2*7^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 43, "-2^6*5^3*7*13*19*251*491/43", "1", "2^3*5^5*29^2/(3*43^2)", "3^6*5^2*43^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 1, 44, "-2^5*5^3*13*421", "2*5/3", "2^5*5^4*41/(3*11^2)", "2^4*3^2*5^2*11^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 1, 45, "2^5*3*5^3*7^2*13*19", "1", "0", "3^10*5^4", "0", "2*3^1+O(3^2)", false},
      {"5w4", 1, 46, "-2^5*3^3*5^3*13*7283/23", "2*5/3", "2^3*3^2*5^3*7*79/23^2", "2^4*3^2*5^2*23^4", "2*3^3+O(3^4)", "2*3^3+O(3^4)", false},
      {"5w4", 1, 47, "2^8*5^3*13*23^2*22567/47", "2^3*5^2*13*67*277/(3*47^2)", "1", "3^6*5^2*47^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 50, "2^3*3*5^2*13^2*97", "1", "0", "2^4*3^6*5^4", "0", "1*3^1+O(3^2)", false},
      {"5w4", 1, 51, "-2^8*5^4*13^2*278591/17", "1", "2^6*5^2*7*83/(3*17^2)", "3^10*5^2*17^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 52, "-2^5*5^3*2513617", "1", "2^5*5^4*11^2/(3*13^2)", "2^4*3^6*5^2*13^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 53, "-2^4*5^4*13*290161/53", "2*5/3", "2^7*5^2*11*13*179/(3*53^2)", "3^2*5^2*53^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 55, "2^5*3*5^2*13*12799/11", "2*5/3", "0", "3^2*5^4*11^4", "0", "1*3^1+O(3^2)", false},
      {"5w4", 1, 57, "-2^6*5^3*13*61*503*4241/19", "1", "2^7*5^3*7^2/(3*19^2)", "3^10*5^2*19^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 1, 58, "-2^9*5^3*13*9208039/29", "1", "2^6*5^4*23*41/(3*29^2)", "2^4*3^6*5^2*29^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 1, 59, "-2^8*5^4*13*23*397*853/59", "1", "2^9*5^3*19*101/(3*59^2)", "3^6*5^2*59^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 60, "2^5*3*5^2*13*19*3499", "1", "0", "2^4*3^10*5^4", "0", "1*3^1+O(3^2)", false},
      {"5w4", 1, 61, "2^6*5^3*13*179702101/61", "2^5*5^5*43^2/(3*61^2)", "1", "3^6*5^2*61^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 1, 62, "-2^5*5^3*13*307*2879/31", "2*5/3", "2^5*5^6*11^2/(3*31^2)", "2^4*3^2*5^2*31^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 66, "-2^8*5^4*13*6458773/11", "1", "2^5*5^4*41/(3*11^2)", "2^4*3^10*5^2*11^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 1, 67, "-2^6*5^3*13^3*19^2*4759/67", "1", "2^3*5^3*443^2/(3*67^2)", "3^6*5^2*67^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 1, 68, "-2^5*5^3*13*10484557/17", "1", "2^6*5^3*7*83/(3*17^2)", "2^4*3^6*5^2*17^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 1, 69, "-2^6*3^3*5^3*13*857*15733/23", "1", "2^3*3^2*5^2*7*79/23^2", "3^10*5^2*23^4", "1*3^3+O(3^4)", "2*3^3+O(3^4)", false},
      {"5w4", 1, 70, "2^9*3*5^4*13*89*131/7", "1", "0", "2^4*3^6*5^4*7^4", "0", "1*3^1+O(3^2)", false},
      {"5w4", 1, 71, "-2^6*5^3*7*13*31*79*101/71", "2*5/3", "2^5*5^3*47*1381/(3*71^2)", "3^2*5^2*71^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 73, "-2^4*5^4*13*17*47*1831/73", "2*5/3", "2^7*5^3*157^2/(3*73^2)", "3^2*5^2*73^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 1, 74, "-2^5*3^4*5^3*11*13*523*1031/37", "1", "2^5*3*5^4*19^2/37^2", "2^4*3^6*5^2*37^4", "1*3^2+O(3^3)", "1*3^4+O(3^5)", false},
      {"5w4", 1, 75, "2^5*3*5^3*7^2*13*19", "1", "0", "3^10*5^4", "0", "2*3^1+O(3^2)", false},
      {"5w4", 1, 76, "-2^8*5^3*13*311*7297/19", "1", "2^7*5^4*7^2/(3*19^2)", "2^4*3^6*5^2*19^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 77, "-2^8*5^3*13*2377*60913/(7*11)", "1", "2^7*5^7*41/(3*7^2*11^2)", "3^6*5^2*7^4*11^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 82, "-2^6*5^4*13*73*4817/41", "2*5/3", "2^7*5^4*17*109/(3*41^2)", "2^4*3^2*5^2*41^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 1, 84, "-2^5*5^3*13*431*10259", "1", "2^3*5^6/(3*7^2)", "2^4*3^10*5^2*7^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 1, 89, "-2^6*3^5*5^3*13*71*293/89", "2*5/3", "2^8*3*5^3*17*131/89^2", "3^2*5^2*89^4", "1*3^2+O(3^3)", "2*3^5+O(3^6)", false},
      {"5w4", 1, 90, "2^5*3*5^2*13*151*463", "1", "0", "2^4*3^10*5^4", "0", "1*3^1+O(3^2)", false},
      {"5w4", 1, 91, "-2^4*5^4*4519393/7", "2*5/3", "2^7*5^7*11^2/(3*7^2*13^2)", "3^2*5^2*7^4*13^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 1, 92, "-2^5*3^2*5^3*13*157*31019/23", "1", "2^3*3^2*5^3*7*79/23^2", "2^4*3^6*5^2*23^4", "2*3^3+O(3^4)", "1*3^2+O(3^3)", false},
      {"5w4", 2, 2, "2*5^2*13/3^3", "1", "5^2/(2*3^2)", "2^4*3^6*5^2", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 3, "2^2*5^2*13/3^5", "1", "2*5/3^2", "3^10*5^2", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 5, "0", "0", "2^4/(3*5)", "3^6*5^4", "1*3^1+O(3^2)", "0", true},
      {"5w4", 2, 6, "2*5^2*7^2*13/3^5", "1", "5^2/(2*3^2)", "2^4*3^10*5^2", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 7, "2^6*5^2*13/(3^3*7^3)", "1", "2^3*5^5/(3^2*7^4)", "3^6*5^2*7^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 10, "0", "0", "2^2/3", "2^4*3^2*5^4", "2*3^1+O(3^2)", "0", true},
      {"5w4", 2, 11, "2^6*5^2*13/(3^3*11)", "1", "2^5*5^3*41/(3^2*11^4)", "3^6*5^2*11^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 12, "2^5*5^2*13/3^5", "1", "5^2/(2*3^2)", "2^4*3^10*5^2", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 13, "2^2*5^2/(3^3*13^2)", "1", "2^5*5^3*11^2/(3^2*13^4)", "3^6*5^2*13^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 14, "2*5^4*13/(3^3*7^3)", "1", "2*5^6/(3^2*7^4)", "2^4*3^6*5^2*7^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 15, "0", "0", "2^4/(3*5)", "3^10*5^4", "1*3^1+O(3^2)", "0", true},
      {"5w4", 2, 17, "2^2*5^4*13/(3*17^3)", "2*5/3^2", "2^6*5^2*7*83/(3^2*17^4)", "3^2*5^2*17^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 19, "2^2*5^2*13^3/(3*19^3)", "2*5/3^2", "2^7*5^3*7^2/(3^2*19^4)", "3^2*5^2*19^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 20, "0", "0", "2^2/3", "2^4*3^6*5^4", "2*3^1+O(3^2)", "0", true},
      {"5w4", 2, 21, "2^2*5^2*13*67^2/(3^5*7^3)", "1", "2^3*5^5/(3^2*7^4)", "3^10*5^2*7^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 22, "2^3*5^2*13/(3^3*11)", "1", "2^3*5^4*41/(3^2*11^4)", "2^4*3^6*5^2*11^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 23, "2^6*5^4*13/(3*23^3)", "1", "2^3*3*5^2*7*79/23^4", "3^6*5^2*23^4", "1*3^3+O(3^4)", "1*3^2+O(3^3)", false},
      {"5w4", 2, 26, "2*5^2/3", "2*5/3^2", "2^3*5^4*11^2/(3^2*13^4)", "2^4*3^2*5^2*13^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 28, "2*5^2*13/(3*7^3)", "2*5/3^2", "2*5^6/(3^2*7^4)", "2^4*3^2*5^2*7^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 29, "2^2*5^2*13*109^2/(3^3*29^3)", "1", "2^6*5^3*23*41/(3^2*29^4)", "3^6*5^2*29^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 30, "0", "0", "2^2/3", "2^4*3^10*5^4", "2*3^1+O(3^2)", "0", true},
      {"5w4", 2, 31, "2^2*5^2*13*151^2/(3^3*31^3)", "1", "2^5*5^5*11^2/(3^2*31^4)", "3^6*5^2*31^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 33, "2^2*5^4*7^2*13/(3^5*11^3)", "1", "2^5*5^3*41/(3^2*11^4)", "3^10*5^2*11^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 34, "2^3*5^2*13/(3^3*17^3)", "1", "2^4*5^3*7*83/(3^2*17^4)", "2^4*3^6*5^2*17^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 35, "0", "0", "2^6*5^3/(3*7^4)", "3^2*5^4*7^4", "1*3^1+O(3^2)", "0", true},
      {"5w4", 2, 37, "2^6*3*5^2*13/37^3", "2*5/3^2", "2^5*5^3*19^2/37^4", "3^2*5^2*37^4", "2*3^2+O(3^3)", "2*3^2+O(3^3)", false},
      {"5w4", 2, 38, "2*5^2*13*41^2/(3^3*19^3)", "1", "2^5*5^4*7^2/(3^2*19^4)", "2^4*3^6*5^2*19^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 39, "2^6*5^2*11^2/(3^5*13^2)", "1", "2^5*5^3*11^2/(3^2*13^4)", "3^10*5^2*13^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 41, "2^2*5^2*11^2*13/(3^3*41^3)", "1", "2^7*5^3*17*109/(3^2*41^4)", "3^6*5^2*41^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 42, "2*5^2*13*149^2/(3^5*7^3)", "1", "2*5^6/(3^2*7^4)", "2^4*3^10*5^2*7^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 43, "2^4*5^6*13/(3^3*43^3)", "1", "2^3*5^5*29^2/(3^2*43^4)", "3^6*5^2*43^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 44, "2*5^2*7^2*13/(3*11^3)", "2*5/3^2", "2^3*5^4*41/(3^2*11^4)", "2^4*3^2*5^2*11^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 45, "0", "0", "2^4/(3*5)", "3^10*5^4", "1*3^1+O(3^2)", "0", true},
      {"5w4", 2, 46, "2*3*5^2*13/23^3", "2*5/3^2", "2*3*5^3*7*79/23^4", "2^4*3^2*5^2*23^4", "2*3^3+O(3^4)", "2*3^2+O(3^3)", false},
      {"5w4", 2, 47, "2^10*5^2*13^3/(3^3*47^3)", "1", "2^3*5^2*13*67*277/(3^2*47^4)", "3^6*5^2*47^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 50, "0", "0", "2^2/3", "2^4*3^6*5^4", "2*3^1+O(3^2)", "0", true},
      {"5w4", 2, 51, "2^6*5^2*13*101^2/(3^5*17^3)", "1", "2^6*5^2*7*83/(3^2*17^4)", "3^10*5^2*17^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 52, "2*5^2/(3^3*13^2)", "1", "2^3*5^4*11^2/(3^2*13^4)", "2^4*3^6*5^2*13^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 53, "2^2*5^2*13*29^2/(3*53^3)", "2*5/3^2", "2^7*5^2*11*13*179/(3^2*53^4)", "3^2*5^2*53^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 55, "0", "0", "2^8*5*41/(3*11^4)", "3^2*5^4*11^4", "2*3^1+O(3^2)", "0", true},
      {"5w4", 2, 57, "2^4*5^2*7^4*13/(3^5*19^3)", "1", "2^7*5^3*7^2/(3^2*19^4)", "3^10*5^2*19^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 58, "2^11*5^4*13/(3^3*29^3)", "1", "2^4*5^4*23*41/(3^2*29^4)", "2^4*3^6*5^2*29^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 59, "2^6*5^2*11^4*13/(3^3*59^3)", "1", "2^9*5^3*19*101/(3^2*59^4)", "3^6*5^2*59^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 60, "0", "0", "2^2/3", "2^4*3^10*5^4", "2*3^1+O(3^2)", "0", true},
      {"5w4", 2, 61, "2^4*5^2*7^2*13*17^2/(3^3*61^3)", "1", "2^5*5^5*43^2/(3^2*61^4)", "3^6*5^2*61^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 62, "2*5^4*7^2*13/(3*31^3)", "2*5/3^2", "2^3*5^6*11^2/(3^2*31^4)", "2^4*3^2*5^2*31^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 66, "2^5*5^2*13/(3^5*11)", "1", "2^3*5^4*41/(3^2*11^4)", "2^4*3^10*5^2*11^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 67, "2^4*5^2*13*103^2/(3^3*67^3)", "1", "2^3*5^3*443^2/(3^2*67^4)", "3^6*5^2*67^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 68, "2*5^2*7^2*13^3/(3^3*17^3)", "1", "2^4*5^3*7*83/(3^2*17^4)", "2^4*3^6*5^2*17^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 69, "2^4*5^2*13*31^2/(3^3*23^3)", "1", "2^3*3*5^2*7*79/23^4", "3^10*5^2*23^4", "1*3^3+O(3^4)", "1*3^2+O(3^3)", false},
      {"5w4", 2, 70, "0", "0", "2^4*5^4/(3*7^4)", "2^4*3^6*5^4*7^4", "2*3^1+O(3^2)", "0", true},
      {"5w4", 2, 71, "2^4*5^2*13*29^2/(3*71^3)", "2*5/3^2", "2^5*5^3*47*1381/(3^2*71^4)", "3^2*5^2*71^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 73, "2^2*5^2*13*43^2/(3*73^3)", "2*5/3^2", "2^7*5^3*157^2/(3^2*73^4)", "3^2*5^2*73^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 74, "2*3^3*5^2*13/37^3", "1", "2^3*5^4*19^2/37^4", "2^4*3^6*5^2*37^4", "1*3^2+O(3^3)", "1*3^6+O(3^7)", false},
      {"5w4", 2, 75, "0", "0", "2^4/(3*5)", "3^10*5^4", "1*3^1+O(3^2)", "0", true},
      {"5w4", 2, 76, "2^5*5^2*13^3/(3^3*19^3)", "1", "2^5*5^4*7^2/(3^2*19^4)", "2^4*3^6*5^2*19^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 77, "2^6*5^2*13*101^2/(3^3*7^3*11^3)", "1", "2^7*5^7*41/(3^2*7^4*11^4)", "3^6*5^2*7^4*11^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 82, "2^3*5^2*11^2*13/(3*41^3)", "2*5/3^2", "2^5*5^4*17*109/(3^2*41^4)", "2^4*3^2*5^2*41^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 83, "2^6*3*5^2*7^2*13/83^3", "1", "2^3*3*5^2*13*31*223/83^4", "3^6*5^2*83^4", "1*3^3+O(3^4)", "1*3^4+O(3^5)", false},
      {"5w4", 2, 84, "2*5^2*13*199^2/(3^5*7^3)", "1", "2*5^6/(3^2*7^4)", "2^4*3^10*5^2*7^4", "1+O(3)", "1+O(3)", false},
      {"5w4", 2, 89, "2^4*3^3*5^4*13/89^3", "2*5/3^2", "2^8*5^3*17*131/89^4", "3^2*5^2*89^4", "1*3^2+O(3^3)", "1*3^4+O(3^5)", false},
      {"5w4", 2, 90, "0", "0", "2^2/3", "2^4*3^10*5^4", "2*3^1+O(3^2)", "0", true},
      {"5w4", 2, 91, "2^2*5^2/(3*7^3*13^2)", "2*5/3^2", "2^7*5^7*11^2/(3^2*7^4*13^4)", "3^2*5^2*7^4*13^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 92, "2*3*5^2*13/23^3", "1", "2*3*5^3*7*79/23^4", "2^4*3^6*5^2*23^4", "2*3^3+O(3^4)", "2*3^4+O(3^5)", false},
      {"5w4", 2, 93, "2^4*5^2*13*31^3*179^2/3^5", "1", "2^5*5^5*11^2/(3^2*31^4)", "3^10*5^2*31^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 94, "2*5^2*11^2*13*19^2/(3^3*47^3)", "1", "2*5^3*13*67*277/(3^2*47^4)", "2^4*3^6*5^2*47^4", "2+O(3)", "2+O(3)", false},
      {"5w4", 2, 97, "2^6*3*5^6*13/97^3", "1", "2^11*5^3*19^2/97^4", "3^6*5^2*97^4", "2*3^2+O(3^3)", "2*3^4+O(3^5)", false},
      {"7w4", 1, 2, "2^3*3*5*7^4", "1", "5*7^2/(2*3)", "2^4*3^6*7^2", "1*3^1+O(3^2)", "1*3^1+O(3^2)", false},
      {"7w4", 1, 3, "2^2*3*5*7^3*13^2", "1", "2*7/3", "3^10*7^2", "2*3^1+O(3^2)", "2*3^1+O(3^2)", false},
      {"7w4", 1, 5, "2^7*3*7^3*71", "1", "2^3*7^2*23/(3*5^2)", "3^6*5^4*7^2", "1*3^1+O(3^2)", "1*3^1+O(3^2)", false},
      {"7w4", 1, 6, "2^4*3*5*7^4*113", "1", "5*7^2/(2*3)", "2^4*3^10*7^2", "1*3^1+O(3^2)", "1*3^1+O(3^2)", false},
      {"7w4", 1, 7, "2^2*3*5*7^2*223", "1", "2^3*7/3", "3^6*7^4", "2*3^1+O(3^2)", "2*3^1+O(3^2)", false},
      {"7w4", 1, 10, "2^3*7^3*239", "2*7/3", "2*7^3*23/(3*5)", "2^4*3^2*5^4*7^2", "2*3^1+O(3^2)", "2*3^1+O(3^2)", false},
      {"7w4", 1, 11, "2^2*3*5*7^3*211*499/11", "1", "2^5*5*7^2*31/(3*11^2)", "3^6*7^2*11^4", "1*3^1+O(3^2)", "1*3^1+O(3^2)", false},
      {"7w4", 1, 12, "2^3*3*5*7^4*241", "1", "5*7^2/(2*3)", "2^4*3^10*7^2", "1*3^1+O(3^2)", "1*3^1+O(3^2)", false},
      {"7w4", 1, 13, "2^8*3*5^2*7^3*773/13", "1", "2^3*7^3*11^2/(3*13^2)", "3^6*7^2*13^4", "2*3^1+O(3^2)", "2*3^1+O(3^2)", false},
      {"7w4", 1, 14, "2^3*3*5*7^2*41*59", "1", "2*5*7^2/3", "2^4*3^6*7^4", "1*3^1+O(3^2)", "1*3^1+O(3^2)", false},
      {"7w4", 1, 15, "2^2*3*5*7^3*13*43*179", "1", "2^3*7^2*23/(3*5^2)", "3^10*5^4*7^2", "1*3^1+O(3^2)", "1*3^1+O(3^2)", false},
      {"7w4", 1, 17, "2^2*3^2*5*7^3*1223/17", "2*7/3", "2^6*3^3*5*7^2/17^2", "3^2*7^2*17^4", "2*3^5+O(3^6)", "1*3^3+O(3^4)", false},
      {"7w4", 1, 19, "2^11*5*7^3*37/19", "2*7/3", "2^3*5^2*7^5/(3*19^2)", "3^2*7^2*19^4", "2*3^1+O(3^2)", "2*3^1+O(3^2)", false},
      {"7w4", 1, 20, "2^7*3*7^3*1213", "1", "2*7^3*23/(3*5)", "2^4*3^6*5^4*7^2", "2*3^1+O(3^2)", "2*3^1+O(3^2)", false},
      {"7w4", 1, 21, "2^13*3*5*7^2*29", "1", "2^3*7/3", "3^10*7^4", "2*3^1+O(3^2)", "2*3^1+O(3^2)", false},
      {"7w4", 1, 22, "2^4*3*5*7^3*19*28277/11", "1", "2^3*5^2*7^3*31/(3*11^2)", "2^4*3^6*7^2*11^4", "2*3^1+O(3^2)", "2*3^1+O(3^2)", false},
      {"7w4", 1, 23, "2^2*3^3*5*7^3*47*10463/23", "1", "2^7*3^2*5^2*7^2/23^2", "3^6*7^2*23^4", "2*3^4+O(3^5)", "1*3^3+O(3^4)", false},
      {"7w4", 1, 26, "2^3*5*7^4*3917/13", "2*7/3", "2*5*7^4*11^2/(3*13^2)", "2^4*3^2*7^2*13^4", "1*3^1+O(3^2)", "1*3^1+O(3^2)", false},
      {"7w4", 1, 28, "2^4*5*7^2*13", "2*7/3", "2*5*7^2/3", "2^4*3^2*7^4", "1*3^1+O(3^2)", "1*3^1+O(3^2)", false},
      {"7w4", 1, 29, "2^2*3*5*7^4*1904647/29", "1", "2^6*5^2*7^3*19/(3*29^2)", "3^6*7^2*29^4", "1*3^1+O(3^2)", "1*3^1+O(3^2)", false},
      {"7w4", 1, 30, "2^3*3*7^3*19*266839", "1", "2*7^3*23/(3*5)", "2^4*3^10*5^4*7^2", "2*3^1+O(3^2)", "2*3^1+O(3^2)", false},
      {"7w4", 1, 31, "2^8*3*5*7^3*307267/31", "1", "2^5*5^2*7^5/(3*31^2)", "3^6*7^2*31^4", "2*3^1+O(3^2)", "2*3^1+O(3^2)", false},
      {"7w4", 1, 33, "2^7*3*5*7^3*849221/11", "1", "2^5*5*7^2*31/(3*11^2)", "3^10*7^2*11^4", "1*3^1+O(3^2)", "1*3^1+O(3^2)", false},
      {"7w4", 1, 34, "2^10*3^3*5*7^3*83*101/17", "1", "2^4*3^3*5^2*7^3/17^2", "2^4*3^6*7^2*17^4", "1*3^5+O(3^6)", "1*3^3+O(3^4)", false},
      {"7w4", 1, 35, "2^2*7^2*43*191", "2*7/3", "2^5*7^2*23/(3*5^2)", "3^2*5^4*7^4", "1*3^1+O(3^2)", "1*3^1+O(3^2)", false},
      {"7w4", 1, 37, "2^7*5*7^3*15937/37", "2*7/3", "2^5*7^3*59^2/(3*37^2)", "3^2*7^2*37^4", "2*3^1+O(3^2)", "2*3^1+O(3^2)", false},
      {"7w4", 1, 38, "2^5*3*5^2*7^3*864947/19", "1", "2*5^3*7^6/(3*19^2)", "2^4*3^6*7^2*19^4", "1*3^1+O(3^2)", "1*3^1+O(3^2)", false},
      {"7w4", 1, 39, "2^8*3*5*7^3*957811/13", "1", "2^3*7^3*11^2/(3*13^2)", "3^10*7^2*13^4", "2*3^1+O(3^2)", "2*3^1+O(3^2)", false},
      {"7w4", 1, 41, "2^4*3*5^2*7^3*13*173*1693/41", "1", "2^7*5*7^3*11*17/(3*41^2)", "3^6*7^2*41^4", "1*3^1+O(3^2)", "1*3^1+O(3^2)", false},
      {"7w4", 1, 42, "2^3*3*5*7^2*37*15601", "1", "2*5*7^2/3", "2^4*3^10*7^4", "1*3^1+O(3^2)", "1*3^1+O(3^2)", false},
      {"7w4", 1, 43, "2^11*3^3*5*7^3*20639/43", "1", "2^5*3^3*7^5/43^2", "3^6*7^2*43^4", "2*3^5+O(3^6)", "2*3^3+O(3^4)", false},
      {"5w6", 1, 2, "-2^12*5^2*31*661", "1", "2^7*5*11/3", "2^4*3^6*5^2", "1+O(3)", "1+O(3)", false},
      {"5w6", 1, 3, "-2^10*5^3*13*31*2953", "1", "2^3*11/3", "3^10*5^2", "2+O(3)", "2+O(3)", false},
      {"5w6", 1, 5, "2^8*3*5*31*193*211", "1", "-2^6*11", "3^6*5^4", "2*3^1+O(3^2)", "1*3^1+O(3^2)", false},
      {"5w6", 1, 6, "-2^11*5^3*31*137*39323", "1", "2^7*5*11/3", "2^4*3^10*5^2", "1+O(3)", "1+O(3)", false},
      {"5w6", 1, 7, "-2^12*5^2*31*14230919", "1", "2^9*11*277^2/(3*7^2)", "3^6*5^2*7^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 1, 10, "2^7*3*5*31*1097", "2^3*11/3", "-2^10*5*11", "2^4*3^2*5^4", "1*3^1+O(3^2)", "2*3^1+O(3^2)", false},
      {"5w6", 1, 11, "-2^13*5^3*31*971*592759/11", "1", "2^10*5^2*7^2*37^2/(3*11)", "3^6*5^2*11^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 1, 12, "-2^11*5^2*7^2*31*533063", "1", "2^7*5*11/3", "2^4*3^10*5^2", "1+O(3)", "1+O(3)", false},
      {"5w6", 1, 13, "-2^10*5^2*7*11*31*211*6591061/13", "1", "2^17*11*17^2/3", "3^6*5^2*13^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 1, 14, "-2^12*5^4*31*1082124649/7", "1", "2^13*5*11*277^2/(3*7^2)", "2^4*3^6*5^2*7^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 1, 15, "2^10*3*5*31*13697*15101", "1", "-2^6*11", "3^10*5^4", "2*3^1+O(3^2)", "1*3^1+O(3^2)", false},
      {"5w6", 1, 17, "-2^10*5^5*7*31*65777/17", "2^3*11/3", "2^10*5*11*2663*4093/(3*17^2)", "3^2*5^2*17^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 1, 18, "-2^11*5^2*7^2*31*533063", "1", "2^7*5*11/3", "2^4*3^10*5^2", "1+O(3)", "1+O(3)", false},
      {"5w6", 1, 19, "-2^10*5^2*11*31*14243891/19", "2^3*11/3", "2^19*5^2*11*101^2/(3*19^2)", "3^2*5^2*19^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 1, 20, "2^7*3*5*31*59*387077", "1", "-2^10*5*11", "2^4*3^6*5^4", "1*3^1+O(3^2)", "2*3^1+O(3^2)", false},
      {"5w6", 1, 21, "-2^10*5^2*29*31*104789*2583353/7", "1", "2^9*11*277^2/(3*7^2)", "3^10*5^2*7^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 1, 23, "-2^12*3^3*5^3*31*32517200203/23", "1", "2^9*3*5*11*83*139*2357/23^2", "3^6*5^2*23^4", "1*3^2+O(3^3)", "1*3^3+O(3^4)", false},
      {"5w6", 1, 26, "-2^11*5^2*31*699507967/13", "2^3*11/3", "2^21*5*11*17^2/3", "2^4*3^2*5^2*13^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 1, 28, "-2^13*5^3*29*31*41*113/7", "2^3*11/3", "2^13*5*11*277^2/(3*7^2)", "2^4*3^2*5^2*7^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 1, 29, "-2^10*5^3*19*31*37*41633381443/29", "1", "2^11*5^3*11*2221*7039/(3*29^2)", "3^6*5^2*29^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 1, 30, "2^7*3*5*13^2*17*31*53*1051*2713", "1", "-2^10*5*11", "2^4*3^10*5^4", "1*3^1+O(3^2)", "2*3^1+O(3^2)", false},
      {"5w6", 1, 31, "-2^10*5^4*1597*25447*254627", "1", "2^11*5^6*11*463^2/(3*31^2)", "3^6*5^2*31^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 1, 33, "-2^10*5^2*31*79*5727093605801/11", "1", "2^10*5^2*7^2*37^2/(3*11)", "3^10*5^2*11^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 1, 34, "-2^12*5^2*7*23*31*227*130914857", "1", "2^14*5^2*11*2663*4093/(3*17^2)", "2^4*3^6*5^2*17^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 1, 35, "2^16*3*5*31*46049", "2^3*11/3", "-2^12*11*277^2/7^2", "3^2*5^4*7^4", "2*3^1+O(3^2)", "1*3^1+O(3^2)", false},
      {"5w6", 1, 37, "-2^12*3^2*5^3*31*181*199*9743/37", "2^3*11/3", "2^13*3^9*11*241^2/37^2", "3^2*5^2*37^4", "2*3^10+O(3^11)", "2*3^2+O(3^3)", false},
      {"5w6", 1, 38, "-2^14*5^4*7*31*61*27077*185057/19", "1", "2^23*5^3*11*101^2/(3*19^2)", "2^4*3^6*5^2*19^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 1, 39, "-2^13*5^2*31*2957*86182236263/13", "1", "2^17*11*17^2/3", "3^10*5^2*13^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 1, 41, "-2^10*5^2*31*3303519970879679/41", "1", "2^13*5^2*11*443*704101/(3*41^2)", "3^6*5^2*41^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 1, 42, "-2^12*5^2*7^2*31*267139*5797783", "1", "2^13*5*11*277^2/(3*7^2)", "2^4*3^10*5^2*7^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 1, 43, "-2^13*5^2*19*638839*52230109/(31*43)", "1", "2^9*7^2*11*157^2*389^2/(3*43^2)", "3^6*5^2*43^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 2, 2, "2^3*31*1759/3^3", "1", "2*5^2*7/3^2", "2^4*3^6*5^2", "1+O(3)", "1+O(3)", false},
      {"5w6", 2, 3, "2^8*5*31*1223/3^5", "1", "2^3*5/3^2", "3^10*5^2", "2+O(3)", "2+O(3)", false},
      {"5w6", 2, 5, "-2^6*13*31*37/(3^2*5)", "1", "0", "3^6*5^4", "0", "2*3^1+O(3^2)", false},
      {"5w6", 2, 6, "2^3*19*31*47*5531/3^5", "1", "2*5^2*7/3^2", "2^4*3^10*5^2", "1+O(3)", "1+O(3)", false},
      {"5w6", 2, 7, "2^8*31*47*53813/(3^3*7^3)", "1", "2^9*5^5/(3^2*7^4)", "3^6*5^2*7^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 2, 10, "-2^3*31^2/5", "2^3*5/3^2", "0", "2^4*3^2*5^4", "0", "1*3^1+O(3^2)", false},
      {"5w6", 2, 11, "2^9*31*28000571/(3^3*11^3)", "1", "2^12*5^3*163/(3^2*11^4)", "3^6*5^2*11^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 2, 12, "2^5*7*31*145543/3^5", "1", "2*5^2*7/3^2", "2^4*3^10*5^2", "1+O(3)", "1+O(3)", false},
      {"5w6", 2, 13, "2^9*31*112051757/(3^3*13^3)", "1", "2^13*5^3/(3^2*13^2)", "3^6*5^2*13^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 2, 14, "2^3*5^2*31*65780839/(3^3*7^3)", "1", "2^7*5^6/(3^2*7^3)", "2^4*3^6*5^2*7^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 2, 15, "-2^9*31*103*1559/(3^4*5)", "1", "0", "3^10*5^4", "0", "2*3^1+O(3^2)", false},
      {"5w6", 2, 17, "2^8*31*491*971/(3*17^3)", "2^3*5/3^2", "2^10*5^2*43*881/(3^2*17^4)", "3^2*5^2*17^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 2, 18, "2^5*7*31*145543/3^5", "1", "2*5^2*7/3^2", "2^4*3^10*5^2", "1+O(3)", "1+O(3)", false},
      {"5w6", 2, 19, "2^7*5*31*418273/(3*19^3)", "2^3*5/3^2", "2^11*5^3*7^2*11^2/(3^2*19^4)", "3^2*5^2*19^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 2, 20, "-2^3*31*96457/(3^2*5)", "1", "0", "2^4*3^6*5^4", "0", "1*3^1+O(3^2)", false},
      {"5w6", 2, 21, "2^9*19^2*31*647*11827/(3^5*7^3)", "1", "2^9*5^5/(3^2*7^4)", "3^10*5^2*7^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 2, 23, "2^9*31*1117*156733/23^3", "1", "2^9*3^4*5^2*653/23^4", "3^6*5^2*23^4", "2*3^6+O(3^7)", "2*3^3+O(3^4)", false},
      {"5w6", 2, 26, "2^3*7*31*6916561/(3*13^3)", "2^3*5/3^2", "2^11*5^4*7/(3^2*13^2)", "2^4*3^2*5^2*13^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 2, 28, "2^3*17*31*39383/(3*7^3)", "2^3*5/3^2", "2^7*5^6/(3^2*7^3)", "2^4*3^2*5^2*7^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 2, 29, "2^8*31*283*3323*64067/(3^3*29^3)", "1", "2^10*5^3*179*1091/(3^2*29^4)", "3^6*5^2*29^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 2, 30, "-2^3*7^2*31*3320281/(3^4*5)", "1", "0", "2^4*3^10*5^4", "0", "1*3^1+O(3^2)", false},
      {"5w6", 2, 31, "2^8*5*73*219638621/(3^3*31^2)", "1", "2^11*5^5*83^2/(3^2*31^4)", "3^6*5^2*31^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 2, 33, "2^8*5^2*31*43*109868293/(3^5*11^3)", "1", "2^12*5^3*163/(3^2*11^4)", "3^10*5^2*11^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 2, 34, "2^7*31*487*122916679/(3^3*17^3)", "1", "2^8*5^3*7*43*881/(3^2*17^4)", "2^4*3^6*5^2*17^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 2, 35, "-2^10*31*10729/(5*7^3)", "2^3*5/3^2", "0", "3^2*5^4*7^4", "0", "2*3^1+O(3^2)", false},
      {"5w6", 2, 37, "2^10*3*5*13*31*59*829/37^3", "2^3*5/3^2", "2^17*3^6*5^3/37^4", "3^2*5^2*37^4", "2*3^8+O(3^9)", "2*3^2+O(3^3)", false},
      {"5w6", 2, 38, "2^3*31*1657646829583/(3^3*19^3)", "1", "2^9*5^4*7^3*11^2/(3^2*19^4)", "2^4*3^6*5^2*19^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 2, 39, "2^9*31*1039*3011*62311/(3^5*13^3)", "1", "2^13*5^3/(3^2*13^2)", "3^10*5^2*13^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 2, 41, "2^7*31*53*709*36628831/(3^3*41^3)", "1", "2^12*5^5*11*13*107/(3^2*41^4)", "3^6*5^2*41^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 2, 42, "2^3*31*59*59147190533/(3^5*7^3)", "1", "2^7*5^6/(3^2*7^3)", "2^4*3^10*5^2*7^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 2, 43, "2^9*31*482148655367/(3^3*43^3)", "1", "2^9*5^5*7^2*59^2/(3^2*43^4)", "3^6*5^2*43^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 3, 2, "-2*31/(3^6*5)", "1", "5^2*7/(2*3^3)", "2^4*3^6*5^2", "1+O(3)", "1+O(3)", false},
      {"5w6", 3, 3, "-2^8*31/(3^10*5)", "1", "2^3*5/3^3", "3^10*5^2", "2+O(3)", "2+O(3)", false},
      {"5w6", 3, 5, "0", "0", "2^6/(3^2*5)", "3^6*5^4", "1*3^1+O(3^2)", "0", true},
      {"5w6", 3, 6, "-2*31*59^2/(3^10*5)", "1", "5^2*7/(2*3^3)", "2^4*3^10*5^2", "1+O(3)", "1+O(3)", false},
      {"5w6", 3, 7, "-2^6*31*47^2/(3^6*5*7^5)", "1", "2^9*5^5/(3^3*7^6)", "3^6*5^2*7^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 3, 10, "0", "0", "2^2*7/3^2", "2^4*3^2*5^4", "2*3^1+O(3^2)", "0", true},
      {"5w6", 3, 11, "-2^6*31*181^2/(3^6*5*11^5)", "1", "2^12*5^3*163/(3^3*11^6)", "3^6*5^2*11^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 3, 12, "-2^7*31/(3^10*5)", "1", "5^2*7/(2*3^3)", "2^4*3^10*5^2", "1+O(3)", "1+O(3)", false},
      {"5w6", 3, 13, "-2^6*31^3/(3^6*5*13^3)", "1", "2^13*5^3/(3^3*13^4)", "3^6*5^2*13^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 3, 14, "-2*5^3*19^2*31/(3^6*7^5)", "1", "2^5*5^6/(3^3*7^5)", "2^4*3^6*5^2*7^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 3, 15, "0", "0", "2^6/(3^2*5)", "3^10*5^4", "1*3^1+O(3^2)", "0", true},
      {"5w6", 3, 17, "-2^6*5*31/(3^2*17^5)", "2^3*5/3^3", "2^10*5^2*43*881/(3^3*17^6)", "3^2*5^2*17^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 3, 18, "-2^7*31/(3^10*5)", "1", "5^2*7/(2*3^3)", "2^4*3^10*5^2", "1+O(3)", "1+O(3)", false},
      {"5w6", 3, 19, "-2^10*31/(3^2*5*19^5)", "2^3*5/3^3", "2^11*5^3*7^2*11^2/(3^3*19^6)", "3^2*5^2*19^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 3, 20, "0", "0", "2^2*7/3^2", "2^4*3^6*5^4", "2*3^1+O(3^2)", "0", true},
      {"5w6", 3, 21, "-2^8*31*191^2/(3^10*5*7^5)", "1", "2^9*5^5/(3^3*7^6)", "3^10*5^2*7^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 3, 23, "-2^6*5*31/(3^4*23^5)", "1", "2^9*3^3*5^2*653/23^6", "3^6*5^2*23^4", "2*3^6+O(3^7)", "1*3^2+O(3^3)", false},
      {"5w6", 3, 26, "-2*31*47^2/(3^2*5*13^5)", "2^3*5/3^3", "2^9*5^4*7/(3^3*13^4)", "2^4*3^2*5^2*13^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 3, 28, "-2*19^2*31/(3^2*5*7^5)", "2^3*5/3^3", "2^5*5^6/(3^3*7^5)", "2^4*3^2*5^2*7^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 3, 29, "-2^8*31*757^2/(3^6*5*29^5)", "1", "2^10*5^3*179*1091/(3^3*29^6)", "3^6*5^2*29^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 3, 30, "0", "0", "2^2*7/3^2", "2^4*3^10*5^4", "2*3^1+O(3^2)", "0", true},
      {"5w6", 3, 31, "-2^8*967^2/(3^6*5*31^4)", "1", "2^11*5^5*83^2/(3^3*31^6)", "3^6*5^2*31^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 3, 33, "-2^6*5*31^3/(3^10*11^5)", "1", "2^12*5^3*163/(3^3*11^6)", "3^10*5^2*11^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 3, 34, "-2^3*31*1867^2/(3^6*5*17^5)", "1", "2^6*5^3*7*43*881/(3^3*17^6)", "2^4*3^6*5^2*17^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 3, 35, "0", "0", "2^12*5^3/(3^2*7^6)", "3^2*5^4*7^4", "1*3^1+O(3^2)", "0", true},
      {"5w6", 3, 37, "-2^6*7^4*31/(5*37^5)", "2^3*5/3^3", "2^17*3^5*5^3/37^6", "3^2*5^2*37^4", "2*3^8+O(3^9)", "2*3^2+O(3^3)", false},
      {"5w6", 3, 38, "-2*31^3*149^2/(3^6*5*19^5)", "1", "2^7*5^4*7^3*11^2/(3^3*19^6)", "2^4*3^6*5^2*19^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 3, 39, "-2^6*7^2*31*97^2/(3^10*5*13^5)", "1", "2^13*5^3/(3^3*13^4)", "3^10*5^2*13^4", "2+O(3)", "2+O(3)", false},
      {"5w6", 3, 41, "-2^6*31*881^2/(3^6*5*41^5)", "1", "2^12*5^5*11*13*107/(3^3*41^6)", "3^6*5^2*41^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 3, 42, "-2*31*4919^2/(3^10*5*7^5)", "1", "2^5*5^6/(3^3*7^5)", "2^4*3^10*5^2*7^4", "1+O(3)", "1+O(3)", false},
      {"5w6", 3, 43, "-2^6*5*13^2*31*67^2/(3^6*43^5)", "1", "2^9*5^5*7^2*59^2/(3^3*43^6)", "3^6*5^2*43^4", "2+O(3)", "2+O(3)", false},
      {"121w4", 1, 2, "2^5*3*11*17*37", "1", "2^2*3", "2^4*3^6*11^4", "2*3^2+O(3^3)", "1*3^1+O(3^2)", false},
      {"121w4", 1, 3, "2^5*5*11*4373", "1", "2^2/3", "3^10*11^4", "2+O(3)", "2+O(3)", false},
      {"121w4", 1, 5, "2^5*3^3*11*2069", "1", "2^8*3/5^2", "3^6*5^4*11^4", "2*3^2+O(3^3)", "1*3^3+O(3^4)", false},
      {"121w4", 1, 6, "2^3*3^2*11*83*2297", "1", "2^2*3", "2^4*3^10*11^4", "2*3^2+O(3^3)", "2*3^2+O(3^3)", false},
      {"121w4", 1, 7, "2^5*5*11*349*863/7", "1", "2^8/3", "3^6*7^4*11^4", "2+O(3)", "2+O(3)", false},
      {"121w4", 1, 10, "2^3*3^2*11*13*211", "2^2/3", "2^8*3^3/5^2", "2^4*3^2*5^4*11^4", "2*3^4+O(3^5)", "1*3^2+O(3^3)", false},
      {"121w4", 1, 11, "2^8*11^2", "1", "2^2/3", "3^6*11^4", "2+O(3)", "2+O(3)", false},
      {"121w4", 1, 12, "2^5*3*11*13*31*367", "1", "2^2*3", "2^4*3^10*11^4", "2*3^2+O(3^3)", "2*3^1+O(3^2)", false},
      {"121w4", 1, 13, "2^5*5*11*29*230281/13", "1", "2^4*7^2/3", "3^6*11^4*13^4", "2+O(3)", "2+O(3)", false},
      {"121w4", 1, 14, "2^7*3*5*11*439*1129/7", "1", "2^8*3", "2^4*3^6*7^4*11^4", "2*3^2+O(3^3)", "1*3^1+O(3^2)", false},
      {"121w4", 1, 15, "2^5*3*11*23234851/5", "2^8*3/5^2", "1", "3^10*5^4*11^4", "2*3^2+O(3^3)", "1*3^1+O(3^2)", false},
      {"121w4", 1, 17, "2^5*3*11*29*8219/17", "2^2/3", "2^4*3^3", "3^2*11^4*17^4", "2*3^4+O(3^5)", "2*3^1+O(3^2)", false},
      {"121w4", 1, 19, "2^5*5^3*11^2*29*31/19", "2^2/3", "2^6*5^2/3", "3^2*11^4*19^4", "2+O(3)", "2+O(3)", false},
      {"121w4", 1, 20, "2^7*3^2*11*156241/5", "1", "2^8*3^3/5^2", "2^4*3^6*5^4*11^4", "2*3^4+O(3^5)", "1*3^2+O(3^3)", false},
  };
  return rows;
}

const std::vector<BRowFixture>& b_rows() {
  static const std::vector<BRowFixture> rows = {
      {"5w4", 2, {"2^2*7", "2", ""}},
      {"5w4", 3, {"5*41", "1", ""}},
      {"5w4", 6, {"2^2*1801", "2*7", ""}},
      {"5w4", 7, {"2^4*23*41", "2^2", ""}},
      {"5w4", 11, {"2^6*2311", "2^2*11", ""}},
      {"5w4", 12, {"2^3*839", "2^3", ""}},
      {"5w4", 13, {"11*13*43*53", "1", ""}},
      {"5w4", 14, {"2^2*5*7*13*251", "2*5", ""}},
      {"5w4", 17, {"31*167", "5", ""}},
      {"5w4", 19, {"5*43^2", "13", ""}},
      {"5w4", 21, {"3425341", "67", ""}},
      {"5w4", 22, {"2^3*43*13841", "2^2*11", ""}},
      {"5w4", 23, {"2^4*3^5*1409", "2^2*3*5", ""}},
      {"5w4", 26, {"2^2*13*887", "2*13", ""}},
      {"5w4", 28, {"2^2*503", "2", ""}},
      {"5w4", 29, {"11*1678031", "109", ""}},
      {"5w4", 31, {"5*79*62351", "151", ""}},
      {"5w4", 33, {"5*11^2*19*2879", "5*7", ""}},
      {"5w4", 34, {"2^4*17*142427", "2^2", ""}},
      {"5w4", 37, {"2^4*3^2*5*367", "2^2*3", ""}},
      {"5w4", 39, {"2^6*71*17489", "2^2*11", ""}},
      {"5w4", 41, {"17*31*211*941", "11", ""}},
      {"5w4", 42, {"2^2*19*859*1801", "2*149", ""}},
      {"5w4", 43, {"2^2*7*19*251*491", "2*5^2", ""}},
      {"5w4", 44, {"2^2*11*421", "2*7", ""}},
      {"5w4", 46, {"2^2*3^3*7283", "2*3", ""}},
      {"5w4", 47, {"2^4*23^2*22567", "2^4*13", ""}},
      {"5w4", 51, {"2^4*5*13*278591", "2^2*101", ""}},
      {"5w4", 52, {"2^2*2513617", "2", ""}},
      {"5w4", 53, {"5*290161", "29", ""}},
      {"5w4", 57, {"2^2*61*503*4241", "2*7^2", ""}},
      {"5w4", 58, {"2^6*9208039", "2^6*5", ""}},
      {"5w4", 59, {"2^4*5*23*397*853", "2^2*11^2", ""}},
      {"5w4", 62, {"2^2*307*2879", "2*5*7", ""}},
      {"5w4", 66, {"2^5*5*6458773", "2^3*11", ""}},
      {"5w4", 67, {"2^2*13^2*19^2*4759", "2*103", ""}},
      {"5w4", 68, {"2^2*10484557", "2*7*13", ""}},
      {"5w4", 69, {"2^2*3^3*857*15733", "2*3*31", ""}},
      {"5w4", 71, {"2^2*7*31*79*101", "2*29", ""}},
      {"5w4", 73, {"5*17*47*1831", "43", ""}},
      {"5w4", 74, {"2^2*3^4*11*523*1031", "2*3^3", ""}},
      {"5w4", 76, {"2^5*311*7297", "2^3*13", ""}},
      {"5w4", 77, {"2^4*7*11*2377*60913", "2^2*101", ""}},
      {"5w4", 82, {"2^3*5*73*4817", "2^2*11", ""}},
      {"5w4", 83, {"", "2^2*3^2*7", ""}},
      {"5w4", 84, {"2^2*7*431*10259", "2*199", ""}},
      {"5w4", 89, {"2^2*3^5*71*293", "2*3^2*5", ""}},
      {"5w4", 91, {"5*4519393", "1", ""}},
      {"5w4", 92, {"2^2*3^2*157*31019", "2*3^2", ""}},
      {"5w4", 93, {"", "2*31^3*179", ""}},
      {"5w4", 94, {"", "2*11*19", ""}},
      {"5w4", 97, {"", "2^2*3^2*5^2", ""}},
      {"7w4", 2, {"2^2*3*7", "", ""}},
      {"7w4", 3, {"3*13^2", "", ""}},
      {"7w4", 5, {"2^5*3*71", "", ""}},
      {"7w4", 6, {"2^3*3*7*113", "", ""}},
      {"7w4", 7, {"3*223", "", ""}},
      {"7w4", 10, {"2^2*239", "", ""}},
      {"7w4", 11, {"3*211*499", "", ""}},
      {"7w4", 12, {"2^2*3*7*241", "", ""}},
      {"7w4", 13, {"2^6*3*5*773", "", ""}},
      {"7w4", 14, {"2^2*3*41*59", "", ""}},
      {"7w4", 15, {"3*5*13*43*179", "", ""}},
      {"7w4", 17, {"3^2*1223", "", ""}},
      {"7w4", 19, {"2^9*37", "", ""}},
      {"7w4", 20, {"2^6*3*1213", "", ""}},
      {"7w4", 21, {"2^11*3*29", "", ""}},
      {"7w4", 22, {"2^3*3*19*28277", "", ""}},
      {"7w4", 23, {"3^3*47*10463", "", ""}},
      {"7w4", 26, {"2^2*7*3917", "", ""}},
      {"7w4", 28, {"2^3*13", "", ""}},
      {"7w4", 29, {"3*7*1904647", "", ""}},
      {"7w4", 30, {"2^2*3*19*266839", "", ""}},
      {"7w4", 31, {"2^6*3*307267", "", ""}},
      {"7w4", 33, {"2^5*3*849221", "", ""}},
      {"7w4", 34, {"2^9*3^3*83*101", "", ""}},
      {"7w4", 35, {"43*191", "", ""}},
      {"7w4", 37, {"2^5*15937", "", ""}},
      {"7w4", 38, {"2^4*3*5*864947", "", ""}},
      {"7w4", 39, {"2^6*3*957811", "", ""}},
      {"7w4", 41, {"2^2*3*5*13*173*1693", "", ""}},
      {"7w4", 42, {"2^2*3*37*15601", "", ""}},
      {"5w6", 2, {"2^5*661", "1759", "1"}},
      {"5w6", 3, {"2^2*5*13*2953", "2^2*5*1223", "2"}},
      {"5w6", 5, {"3*193*211", "3*5^2*13*37", "0"}},
      {"5w6", 6, {"2^4*5*137*39323", "19*47*5531", "59"}},
      {"5w6", 7, {"2^4*7*14230919", "2^2*47*53813", "47"}},
      {"5w6", 10, {"3*1097", "3*5^2*31", "0"}},
      {"5w6", 11, {"2^5*5*971*592759", "2^3*28000571", "181"}},
      {"5w6", 12, {"2^4*7^2*533063", "2^2*7*145543", "2^3"}},
      {"5w6", 13, {"2^2*7*11*211*6591061", "2^3*112051757", "13*31"}},
      {"5w6", 14, {"2^5*5^2*1082124649", "5^2*65780839", "5^2*19"}},
      {"5w6", 15, {"2^2*3*13697*15101", "2^3*3*5^2*103*1559", "0"}},
      {"5w6", 17, {"2^2*5^3*7*65777", "2^2*491*971", "5"}},
      {"5w6", 18, {"2^4*7^2*533063", "2^2*7*145543", "2^3"}},
      {"5w6", 19, {"2^2*11*14243891", "2*5*418273", "2^2"}},
      {"5w6", 20, {"3*59*387077", "3*5^2*96457", "0"}},
      {"5w6", 21, {"2^2*29*104789*2583353", "2^3*19^2*647*11827", "2*191"}},
      {"5w6", 23, {"2^4*3^3*5*32517200203", "2^3*3^3*1117*156733", "3*5"}},
      {"5w6", 26, {"2^4*699507967", "7*6916561", "47"}},
      {"5w6", 28, {"2^6*5*29*41*113", "17*39383", "19"}},
      {"5w6", 29, {"2^2*5*19*37*41633381443", "2^2*283*3323*64067", "2*757"}},
      {"5w6", 30, {"3*13^2*17*53*1051*2713", "3*5^2*7^2*3320281", "0"}},
      {"5w6", 31, {"2^2*5^2*1597*25447*254627", "2^2*5*73*219638621", "2*967"}},
      {"5w6", 33, {"2^2*79*5727093605801", "2^2*5^2*43*109868293", "5*31"}},
      {"5w6", 34, {"2^5*7*17*23*227*130914857", "2^4*487*122916679", "2*1867"}},
      {"5w6", 35, {"2^8*3*7*46049", "2^4*3*5^2*10729", "0"}},
      {"5w6", 37, {"2^4*3^2*5*181*199*9743", "2^4*3^2*5*13*59*829", "3*7^2"}},
      {"5w6", 38, {"2^7*5^2*7*61*27077*185057", "1657646829583", "31*149"}},
      {"5w6", 39, {"2^5*2957*86182236263", "2^3*1039*3011*62311", "7*97"}},
      {"5w6", 41, {"2^2*3303519970879679", "2*53*709*36628831", "881"}},
      {"5w6", 42, {"2^5*7^3*267139*5797783", "59*59147190533", "4919"}},
      {"5w6", 43, {"2^5*19*638839*52230109", "2^3*482148655367", "5*13*67"}},
      {"121w4", 2, {"2^2*3*17*37", "", ""}},
      {"121w4", 3, {"2*5*4373", "", ""}},
      {"121w4", 5, {"2*3^3*5*2069", "", ""}},
      {"121w4", 6, {"3^2*83*2297", "", ""}},
      {"121w4", 7, {"2*5*349*863", "", ""}},
      {"121w4", 10, {"3^2*5*13*211", "", ""}},
      {"121w4", 11, {"2^4*11^2", "", ""}},
      {"121w4", 12, {"2^2*3*13*31*367", "", ""}},
      {"121w4", 14, {"2^4*3*5*439*1129", "", ""}},
      {"121w4", 17, {"2*3*29*8219", "", ""}},
      {"121w4", 19, {"2*5^3*11*29*31", "", ""}},
      {"121w4", 20, {"2^4*3^2*156241", "", ""}},
  };
  return rows;
}

const std::vector<HeaderFixture>& header_values() {
  static const std::vector<HeaderFixture> rows = {
      {"5w4", 1, "-100"},     {"5w4", 2, "13/3"},   {"7w4", 1, "49"},
      {"7w4", 2, "0"},        {"5w6", 1, "-400"},   {"5w6", 2, "62/15"},
      {"5w6", 3, "-31/1125"}, {"121w4", 1, "176"},  {"121w4", 2, "0"},
  };
  return rows;
}

const std::vector<BTableSpec>& b_table_specs() {
  static const std::vector<BTableSpec> specs = {
      {"5w4", "V", 2, {"2^2*5^3*13", "5^2*13", ""}, {false, true, false}},
      {"7w4", "VI", 1, {"7^3*5", "", ""}, {false, false, false}},
      {"5w6", "VII", 3, {"2^6*31*5^2", "2^4*31", "2^4*31/5"}, {false, false, true}},
      {"121w4", "VIII", 1, {"2^2*11", "", ""}, {false, false, false}},
  };
  return specs;
}

std::optional<TableRowFixture> find_row(const std::string& form, long m, int n) {
  for (const auto& r : table_rows())
    if (form == r.form && r.m == m && r.n == n) return r;
  return std::nullopt;
}

std::optional<BRowFixture> find_b_row(const std::string& form, long m) {
  for (const auto& r : b_rows())
    if (form == r.form && r.m == m) return r;
  return std::nullopt;
}

std::optional<BTableSpec> find_b_spec(const std::string& form) {
  for (const auto& s : b_table_specs())
    if (form == s.form) return s;
  return std::nullopt;
}

int table_max_n(const std::string& form) {
  int n = 0;
  for (const auto& r : table_rows())
    if (form == r.form) n = std::max(n, r.n);
  return n;
}

}  // namespace lcong
