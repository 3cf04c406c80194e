"""Printed sign-transform tables, transcribed verbatim as strings (n, then three columns per function)."""

from __future__ import annotations

PRINTED: dict[str, list[tuple[str, ...]]] = {
    "smooth-1": [
        ("1", "1", "1", "-1", "1", "1", "-1"),
        ("2", "-1", "0", "-2", "-2", "-1", "-3"),
        ("3", "-2", "-2", "1", "-2", "-3", "0"),
        ("4", "-1", "-2", "0", "2", "0", "3"),
        ("5", "-4", "-7", "1", "-2", "-4", "1"),
        ("6", "2", "-6", "6", "5", "0", "6"),
        ("7", "-6", "-13", "7", "-2", "-1", "8"),
        ("8", "-1", "-20", "8", "-2", "-8", "3"),
        ("9", "-2", "-23", "5", "2", "-2", "3"),
        ("10", "4", "-31", "15", "5", "-1", "10"),
        ("11", "-10", "-47", "24", "-2", "-4", "14"),
        ("12", "2", "-60", "23", "-7", "-12", "2"),
        ("13", "-12", "-82", "32", "-2", "-11", "8"),
        ("14", "6", "-107", "47", "5", "-12", "25"),
        ("15", "8", "-113", "37", "5", "-9", "15"),
        ("16", "-1", "-159", "39", "2", "-7", "13"),
    ],
    "smooth-2": [
        ("1", "1", "1", "-1", "1", "1", "-1"),
        ("2", "-2", "-1", "-3", "-3", "-2", "-4"),
        ("3", "-2", "-3", "0", "-4", "-6", "1"),
        ("4", "1", "-1", "2", "2", "-3", "5"),
        ("5", "-2", "-5", "0", "-6", "-12", "4"),
        ("6", "4", "-2", "5", "12", "-3", "18"),
        ("7", "-2", "-4", "6", "-8", "-11", "22"),
        ("8", "0", "-9", "4", "0", "-23", "16"),
        ("9", "1", "-6", "4", "3", "-12", "16"),
        ("10", "4", "-7", "8", "18", "-11", "39"),
        ("11", "-2", "-10", "13", "-12", "-23", "58"),
        ("12", "-2", "-16", "7", "-8", "-40", "31"),
        ("13", "-2", "-17", "12", "-14", "-45", "56"),
        ("14", "4", "-21", "22", "24", "-48", "109"),
        ("15", "4", "-18", "18", "24", "-20", "75"),
        ("16", "0", "-23", "16", "0", "-42", "66"),
    ],
    "smooth-3": [
        ("1", "1", "1", "-1", "1", "1", "-1"),
        ("2", "-1", "0", "-2", "-2", "-1", "-3"),
        ("3", "-2", "-2", "1", "-2", "-3", "0"),
        ("4", "-1", "-2", "0", "1", "-1", "2"),
        ("5", "-3", "-6", "0", "-2", "-5", "0"),
        ("6", "1", "-6", "4", "5", "-1", "6"),
        ("7", "-4", "-11", "4", "-2", "-3", "7"),
        ("8", "-1", "-17", "5", "0", "-8", "4"),
        ("9", "0", "-19", "1", "1", "-4", "5"),
        ("10", "2", "-26", "7", "5", "-4", "10"),
        ("11", "-5", "-37", "13", "-2", "-6", "15"),
        ("12", "3", "-45", "13", "-4", "-13", "6"),
        ("13", "-6", "-61", "18", "-2", "-12", "12"),
        ("14", "2", "-80", "22", "5", "-14", "26"),
        ("15", "6", "-85", "19", "5", "-9", "19"),
        ("16", "1", "-114", "21", "0", "-11", "16"),
    ],
    "smooth-4": [
        ("1", "1.000000", "1.000000", "-1.000000", "-1", "-1", "1"),
        ("2", "-0.693147", "0.306852", "-1.693147", "-1", "-2", "0"),
        ("3", "-1.098612", "-0.791759", "0.405465", "1", "-1", "-2"),
        ("4", "-0.212694", "-0.00445", "-0.114081", "-2", "-4", "-2"),
        ("5", "-1.609437", "-2.30703", "-0.29640", "1", "-4", "-3"),
        ("6", "1.523000", "-0.88265", "2.53790", "1", "-3", "-1"),
        ("7", "-1.945910", "-2.73440", "2.66168", "1", "-6", "-3"),
        ("8", "-0.065265", "-5.20086", "2.68285", "-4", "-10", "-9"),
        ("9", "0.108336", "-4.57398", "1.15160", "0", "-12", "-6"),
        ("10", "2.23115", "-5.9026", "4.70078", "1", "-13", "-3"),
        ("11", "-2.397895", "-9.1498", "8.24036", "1", "-19", "-9"),
        ("12", "-0.06049", "-12.9305", "5.62768", "2", "-18", "-10"),
        ("13", "-2.564949", "-16.3708", "8.63533", "1", "-24", "-9"),
        ("14", "2.69760", "-21.3719", "14.6211", "1", "-30", "-11"),
        ("15", "3.53629", "-19.5413", "11.5039", "-1", "-35", "-9"),
        ("16", "-0.02002", "-28.0212", "10.0733", "-8", "-50", "-24"),
    ],
    "smooth-5": [
        ("1", "1", "1", "-1", "1", "1", "-1"),
        ("2", "1", "2", "0", "1", "2", "0"),
        ("3", "1", "3", "0", "1", "3", "0"),
        ("4", "1", "5", "-1", "0", "4", "-2"),
        ("5", "1", "7", "0", "1", "6", "-1"),
        ("6", "1", "10", "-1", "1", "9", "-1"),
        ("7", "1", "14", "0", "1", "12", "-1"),
        ("8", "1", "19", "-1", "0", "16", "-3"),
        ("9", "1", "25", "-1", "0", "20", "-2"),
        ("10", "1", "33", "-1", "1", "27", "-1"),
        ("11", "1", "43", "-1", "1", "35", "-3"),
        ("12", "1", "55", "-1", "0", "44", "-4"),
        ("13", "1", "70", "-2", "1", "56", "-5"),
        ("14", "1", "88", "-1", "1", "70", "-3"),
        ("15", "1", "110", "-2", "1", "87", "-5"),
        ("16", "1", "137", "-2", "0", "108", "-8"),
    ],
    "nonsmooth-1": [
        ("1", "1", "1", "-1", "1", "1", "-1"),
        ("2", "-1", "-2", "0", "-2", "-3", "-1"),
        ("3", "-2", "-2", "1", "-2", "-1", "2"),
        ("4", "-1", "2", "-2", "2", "6", "-1"),
        ("5", "-4", "-1", "7", "-2", "-2", "5"),
        ("6", "2", "8", "-8", "5", "6", "-2"),
        ("7", "-6", "-5", "21", "-2", "-7", "8"),
        ("8", "-1", "2", "-30", "-2", "-6", "-11"),
        ("9", "-2", "3", "51", "2", "6", "15"),
        ("10", "4", "1", "-69", "5", "1", "-14"),
        ("11", "-10", "-11", "120", "-2", "-2", "28"),
        ("12", "2", "-2", "-159", "-7", "-14", "-36"),
        ("13", "-12", "-4", "252", "-2", "9", "52"),
        ("14", "6", "9", "-333", "5", "16", "-61"),
        ("15", "8", "19", "479", "5", "7", "85"),
        ("16", "-1", "-27", "-643", "2", "-11", "-101"),
    ],
    "nonsmooth-2": [
        ("1", "1", "1", "-1", "1", "1", "-1"),
        ("2", "-2", "-3", "-1", "-3", "-4", "-2"),
        ("3", "-2", "-1", "2", "-4", "-2", "5"),
        ("4", "1", "5", "-2", "2", "9", "-5"),
        ("5", "-2", "-1", "6", "-6", "-4", "16"),
        ("6", "4", "6", "-5", "12", "17", "-10"),
        ("7", "-2", "-6", "12", "-8", "-17", "32"),
        ("8", "0", "-3", "-16", "0", "-7", "-38"),
        ("9", "1", "2", "24", "3", "10", "60"),
        ("10", "4", "-1", "-28", "18", "5", "-59"),
        ("11", "-2", "-2", "47", "-12", "-19", "116"),
        ("12", "-2", "-8", "-59", "-8", "-28", "-135"),
        ("13", "-2", "5", "86", "-14", "17", "216"),
        ("14", "4", "9", "-106", "24", "44", "-237"),
        ("15", "4", "8", "146", "24", "36", "337"),
        ("16", "0", "-11", "-182", "0", "-60", "-402"),
    ],
    "nonsmooth-3": [
        ("1", "1", "1", "-1", "1", "1", "-1"),
        ("2", "-1", "-2", "0", "-2", "-3", "-1"),
        ("3", "-2", "-2", "1", "-2", "-1", "2"),
        ("4", "-1", "2", "-2", "1", "5", "-2"),
        ("5", "-3", "0", "6", "-2", "-1", "6"),
        ("6", "1", "6", "-8", "5", "7", "-4"),
        ("7", "-4", "-3", "18", "-2", "-7", "11"),
        ("8", "-1", "1", "-27", "0", "-4", "-14"),
        ("9", "0", "3", "43", "1", "2", "21"),
        ("10", "2", "-2", "-61", "5", "0", "-22"),
        ("11", "-5", "-7", "99", "-2", "-2", "39"),
        ("12", "3", "-1", "-133", "-4", "-11", "-48"),
        ("13", "-6", "-5", "202", "-2", "8", "70"),
        ("14", "2", "2", "-272", "5", "12", "-82"),
        ("15", "6", "13", "381", "5", "9", "113"),
        ("16", "1", "-12", "-511", "0", "-13", "-136"),
    ],
    "nonsmooth-4": [
        ("1", "1.000000", "1.000000", "-1.000000", "-1", "-1", "1"),
        ("2", "-0.693147", "-1.693147", "0.306852", "-1", "0", "-2"),
        ("3", "-1.098612", "-1.405465", "-0.208240", "1", "3", "2"),
        ("4", "-0.212694", "1.579065", "0.30239", "-2", "-2", "-6"),
        ("5", "-1.609437", "-0.29813", "1.09879", "1", "2", "7"),
        ("6", "1.523000", "4.34513", "-0.27339", "1", "1", "-11"),
        ("7", "-1.945910", "-2.55261", "3.62496", "1", "-2", "15"),
        ("8", "-0.065265", "0.25903", "-5.1718", "-4", "-6", "-27"),
        ("9", "0.108336", "1.21367", "9.2977", "0", "0", "34"),
        ("10", "2.23115", "-0.51996", "-11.3478", "1", "7", "-51"),
        ("11", "-2.397895", "-3.42708", "23.0725", "1", "-1", "67"),
        ("12", "-0.06049", "-3.44910", "-29.7571", "2", "2", "-94"),
        ("13", "-2.564949", "0.35117", "48.9493", "1", "-4", "123"),
        ("14", "2.69760", "4.17862", "-62.779", "1", "0", "-169"),
        ("15", "3.53629", "6.66814", "91.464", "-1", "-7", "217"),
        ("16", "-0.02002", "-9.33079", "-120.591", "-8", "-4", "-300"),
    ],
    "nonsmooth-5": [
        ("1", "1", "1", "-1", "1", "1", "-1"),
        ("2", "1", "0", "2", "1", "0", "2"),
        ("3", "1", "-1", "-4", "1", "-1", "-4"),
        ("4", "1", "-1", "7", "0", "-2", "6"),
        ("5", "1", "-1", "-12", "1", "0", "-11"),
        ("6", "1", "0", "19", "1", "1", "17"),
        ("7", "1", "0", "-30", "1", "0", "-27"),
        ("8", "1", "1", "45", "0", "0", "39"),
        ("9", "1", "1", "-67", "0", "0", "-58"),
        ("10", "1", "1", "97", "1", "3", "83"),
        ("11", "1", "1", "-139", "1", "1", "-119"),
        ("12", "1", "1", "195", "0", "0", "164"),
        ("13", "1", "0", "-272", "1", "0", "-229"),
        ("14", "1", "0", "373", "1", "0", "311"),
        ("15", "1", "0", "-508", "1", "-1", "-423"),
        ("16", "1", "-1", "684", "0", "-2", "564"),
        ("17", "1", "-1", "-915", "1", "-1", "-754"),
        ("18", "1", "-1", "1212", "0", "-1", "991"),
        ("19", "1", "-1", "-1597", "1", "0", "-1304"),
        ("20", "1", "-1", "2087", "0", "0", "1693"),
        ("21", "1", "-1", "-2714", "1", "0", "-2198"),
        ("22", "1", "-1", "3506", "1", "0", "2825"),
        ("23", "1", "0", "-4508", "1", "-1", "-3626"),
        ("24", "1", "0", "5763", "0", "1", "4613"),
        ("25", "1", "0", "-7338", "0", "-2", "-5863"),
        ("26", "1", "0", "9296", "1", "1", "7399"),
        ("27", "1", "1", "-11732", "0", "1", "-9319"),
        ("28", "1", "1", "14742", "0", "2", "11668"),
        ("29", "1", "1", "-18460", "1", "2", "-14584"),
        ("30", "1", "1", "23025", "1", "0", "18133"),
        ("31", "1", "1", "-28629", "1", "0", "-22505"),
        ("32", "1", "1", "35471", "0", "-1", "27803"),
    ],
}
