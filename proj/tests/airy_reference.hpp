#pragma once

// Ai, Ai', Bi, Bi' at fixed points (mpmath, 40-digit working precision, 20 printed).

struct AiryReference {
  double z[2];
  double ai[2];
  double aip[2];
  double bi[2];
  double bip[2];
};

inline constexpr AiryReference kAiryReference[] = {
    {{0.0, 0.0}, {0.35502805388781723926, 0.0}, {-0.25881940379280679841, 0.0}, {0.61492662744600073515, 0.0}, {0.44828835735382635791, 0.0}},
    {{1.0, 0.0}, {0.13529241631288141552, 0.0}, {-0.15914744129679321279, 0.0}, {1.2074235949528712594, 0.0}, {0.93243593339277563296, 0.0}},
    {{-2.5, 0.0}, {-0.11232506769296608919, 0.0}, {0.67885273426479436337, 0.0}, {-0.43242247184070529303, 0.0}, {-0.22042015487462958768, 0.0}},
    {{3.0, 4.0}, {0.014554546690944634862, -0.047435251515492836146}, {-0.075209961195903029036, 0.08236407715553779509}, {1.0363977946545908751, 1.0513762825317121197}, {0.78788923789635748276, 2.9998668872583759608}},
    {{2.5, 4.3301270189221936491}, {0.02777465929379738938, -0.1864762559613731161}, {-0.25526398037365436826, 0.33628158965246526906}, {0.42105963298251821157, 0.32298634973031669508}, {-0.2304329959554965611, 0.58245679892809750505}},
    {{0.0, 7.9000000000000003553}, {-822.49128470178649307, 5876.2404250153559193}, {13124.410439127074094, -10074.749439587143254}, {-5876.2404326318322561, -822.49129045170099332}, {10074.749436051411774, 13124.410412322338918}},
    {{8.0999999999999996447, 0.0}, {3.5224356235735714843e-8, 0.0}, {-1.0130972032660844188e-7, 0.0}, {1.5880461279294283667e+6, 0.0}, {4.4692194243083449613e+6, 0.0}},
    {{-12.0, 0.0}, {-0.066555175054373129474, 0.0}, {1.0231104533679707299, 0.0}, {-0.29571991207807305673, 0.0}, {-0.23673219783112331633, 0.0}},
    {{10.0, 10.0}, {6.6499129796750957586e-9, -1.860283363786204014e-7}, {-2.8861520248004508458e-7, 6.3917737306735688367e-7}, {94457.972829068239851, 2.0679545143496917985e+5}, {26778.702343064468978, 8.5304654585590627804e+5}},
    {{-8.8275167588301872712, 12.127446057293850501}, {4.378076359226887794e+15, -3.8710504357442104441e+15}, {-2.0956534966071482272e+16, -8.2898744110404924885e+15}, {3.8710504357442104441e+15, 4.378076359226887794e+15}, {8.2898744110404924885e+15, -2.0956534966071482272e+16}},
    {{20.0, 0.0}, {1.6916728686705403136e-27, 0.0}, {-7.5863916257483549605e-27, 0.0}, {2.1037650496511038145e+25, 0.0}, {9.3818393361339643491e+25, 0.0}},
    {{-20.0, 0.0}, {-0.17640612707798468959, 0.0}, {0.8928628567364712384, 0.0}, {-0.20013930932265134928, 0.0}, {-0.79142903383953647936, 0.0}},
    {{0.0, 19.0}, {-1.9826381733180222803e+15, -1.204207165819595532e+16}, {-3.0845820094964138458e+16, 4.3201699956532725917e+16}, {1.204207165819595532e+16, -1.9826381733180222803e+15}, {-4.3201699956532725917e+16, -3.0845820094964138458e+16}},
    {{-6.0, -6.5}, {1.0982809218419981488e+6, 2.3567046074470982042e+6}, {-7.6595256197279846615e+6, 2.04527941155200901e+5}, {2.3567046074471187831e+6, -1.0982809218419976641e+6}, {2.045279411552271628e+5, 7.6595256197279287603e+6}},
    {{2.25, -7.5}, {2.2484791800837429319, 24.571740080573241595}, {-45.363144598713426032, -51.725248090309220769}, {24.573278115223934952, -2.2501953390580760221}, {-51.724726840298633414, 45.356690068879548577}},
    {{-3.7453215289242813846, -8.1836768414311347186}, {-8.9196117967727139741e+6, 9.1305649308980038641e+5}, {1.2071809192938154419e+7, -2.3754897697956916275e+7}, {9.1305649308979771229e+5, 8.9196117967727086946e+6}, {-2.3754897697956934098e+7, -1.207180919293815622e+7}},
};
