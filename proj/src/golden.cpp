// Copyright 2026 The TGRE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tgre/golden.hpp"

namespace tgre::golden {

// Z-TGRE listings for N = 4, 8, 16, 32, as printed.
const std::vector<Listing> &ztgre_listings() {
    static const std::vector<Listing> listings = {
        {2, 0,
         {"Z1Z2Z3", "Z1Z3Z4"},
         {"X1X2X4", "X2X3X4"},
         {"Z1", "Z3"}},
        {3, 0,
         {"Z1Z2Z3Z5", "Z1Z3Z4Z7", "Z1Z5Z6Z7", "Z3Z5Z7Z8"},
         {"X1X2X3X5", "X1X3X4X7", "X1X5X6X7", "X3X5X7X8"},
         {"Z2", "Z4", "Z6", "Z8"}},
        {4, 0,
         {"Z1Z2Z3Z5Z9", "Z1Z3Z4Z7Z11", "Z1Z5Z6Z7Z13", "Z3Z5Z7Z8Z15", "Z1Z9Z10Z11Z13", "Z3Z9Z11Z12Z15",
          "Z5Z9Z13Z14Z15", "Z7Z11Z13Z15Z16"},
         {"X1X2X4X6X10", "X2X3X4X8X12", "X2X5X6X8X14", "X4X6X7X8X16", "X2X9X10X12X14", "X4X10X11X12X16",
          "X6X10X13X14X16", "X8X12X14X15X16"},
         {"Z1", "Z3", "Z5", "Z7", "Z9", "Z11", "Z13", "Z15"}},
        {5, 0,
         {"Z1Z2Z3Z5Z9Z17", "Z1Z3Z4Z7Z11Z19", "Z1Z5Z6Z7Z13Z21", "Z3Z5Z7Z8Z15Z23", "Z1Z9Z10Z11Z13Z25",
          "Z3Z9Z11Z12Z15Z27", "Z5Z9Z13Z14Z15Z29", "Z7Z11Z13Z15Z16Z31", "Z1Z17Z18Z19Z21Z25",
          "Z3Z17Z19Z20Z23Z27", "Z5Z17Z21Z22Z23Z29", "Z7Z19Z21Z23Z24Z31", "Z9Z17Z25Z26Z27Z29",
          "Z11Z19Z25Z27Z28Z31", "Z13Z21Z25Z29Z30Z31", "Z15Z23Z27Z29Z31Z32"},
         {"X1X2X3X5X9X17", "X1X3X4X7X11X19", "X1X5X6X7X13X21", "X3X5X7X8X15X23", "X1X9X10X11X13X25",
          "X3X9X11X12X15X27", "X5X9X13X14X15X29", "X7X11X13X15X16X31", "X1X17X18X19X21X25",
          "X3X17X19X20X23X27", "X5X17X21X22X23X29", "X7X19X21X23X24X31", "X9X17X25X26X27X29",
          "X11X19X25X27X28X31", "X13X21X25X29X30X31", "X15X23X27X29X31X32"},
         {"Z2", "Z4", "Z6", "Z8", "Z10", "Z12", "Z14", "Z16", "Z18", "Z20", "Z22", "Z24", "Z26", "Z28",
          "Z30", "Z32"}},
    };
    return listings;
}

// XZ-TGRE L=3, a=1 listing exactly as printed, S_1..S_8 then S'_1..S'_8.
const Listing &xztgre_3_1_printed() {
    static const Listing listing = {3, 1,
        {"Z1Z2Z3Z4Z5Z6Z9", "Z1Z2Z5Z6Z7Z8Z13", "Z1Z2Z4Z6Z9Z11Z13", "Z2Z5Z6Z8Z9Z13Z15", "Z2Z4Z6Z17Z19Z21Z25",
         "Z2Z6Z8Z17Z21Z23Z29", "Z2Z4Z6Z17Z25Z27Z29", "Z2Z6Z8Z21Z25Z29Z31", "X1X2X3X4X7X8X11",
         "X3X4X5X6X7X8X11", "X2X3X4X8X9X11X15", "X4X6X7X8X11X13X15", "X2X4X8X17X19X23X27",
         "X4X6X8X19X21X23X31", "X2X4X8X19X25X27X31", "X4X6X8X23X27X29X31"},
        {"X2X4X8", "X4X6X8", "X3X4X11X19X27", "X7X8X15X23X31"},
        {"Z1Z2Z9Z17Z25", "Z5Z6Z13Z21Z29", "Z2Z4Z6", "Z2Z6Z8"}};
    return listing;
}

const std::vector<DistanceRow> &distance_rows() {
    static const std::vector<DistanceRow> rows = {
        {2, 1, 10, 2, 2, 2, 2, {1, 5}},
        {3, 1, 20, 2, 2, 3, 2, {1, 5}},
        {4, 1, 40, 4, 4, 4, 4, {1, 5}},
        {5, 1, 80, 4, 4, 5, 4, {1, 5}},
        {6, 2, 144, 4, 4, 5, 4, {1, 9}},
        {7, 2, 288, 6, 6, 6, 6, {1, 9}},
        {8, 2, 576, 6, 7, 7, 6, {1, 9}},
        {9, 2, 1152, 8, 8, 9, 8, {1, 9}},
    };
    return rows;
}

}  // namespace tgre::golden
