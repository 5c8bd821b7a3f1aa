"""Embedded empirical-prior tables.

Rows are stored verbatim as published: (topic, comparisons_mu, estimates_mu,
comparisons_tau, estimates_tau, prior_mu, prior_tau). Heterogeneity columns
are None where the source prints no entry. A SHA-256 over the canonical
serialization guards against accidental edits; see prior_registry.registry_checksum.
"""
from __future__ import annotations

Row = tuple[str, int, int, int | None, int | None, str, str | None]

LOG_OR_ROWS: tuple[Row, ...] = (
    ("Acute Respiratory Infections", 308, 5860, 197, 4061, "Student-t(0, 0.48, 3)", "Inv-Gamma(1.67, 0.45)"),
    ("Airways", 450, 8702, 207, 3839, "Student-t(0, 0.37, 2)", "Inv-Gamma(1.35, 0.27)"),
    ("Anaesthesia", 408, 9409, 261, 6781, "Student-t(0, 0.79, 6)", "Inv-Gamma(2.12, 0.86)"),
    ("Back and Neck", 14, 295, 10, 238, "Student-t(0, 0.62, 4)", "Inv-Gamma(1.84, 0.68)"),
    ("Bone, Joint and Muscle Trauma", 202, 3732, 103, 1937, "Student-t(0, 0.44, 2)", "Inv-Gamma(1.01, 0.36)"),
    ("Breast Cancer", 137, 2646, 113, 2296, "Student-t(0, 0.39, 3)", "Inv-Gamma(1.59, 0.48)"),
    ("Childhood Cancer", 1, 13, None, None, "Student-t(0, 0.47, 4)", None),
    ("Colorectal", 230, 4120, 141, 2685, "Student-t(0, 0.65, 4)", "Inv-Gamma(1.71, 0.60)"),
    ("Common Mental Disorders", 649, 13322, 422, 9731, "Student-t(0, 0.54, 4)", "Inv-Gamma(1.63, 0.45)"),
    ("Consumers and Communication", 44, 918, 41, 875, "Student-t(0, 0.48, 4)", "Inv-Gamma(2.37, 0.86)"),
    ("Cystic Fibrosis and Genetic Disorders", 81, 1843, 40, 964, "Student-t(0, 0.40, 3)", "Inv-Gamma(1.82, 0.58)"),
    ("Dementia and Cognitive Improvement", 127, 2097, 78, 1278, "Student-t(0, 0.49, 4)", "Inv-Gamma(1.28, 0.25)"),
    ("Developmental, Psychosocial and Learning Problems", 106, 1457, 79, 1083, "Student-t(0, 0.83, 5)", "Inv-Gamma(1.83, 0.82)"),
    ("Drugs and Alcohol", 103, 2027, 73, 1545, "Student-t(0, 0.44, 4)", "Inv-Gamma(1.59, 0.42)"),
    ("Effective Practice and Organisation of Care", 59, 1106, 44, 878, "Student-t(0, 0.51, 4)", "Inv-Gamma(1.90, 0.68)"),
    ("Emergency and Critical Care", 233, 4803, 152, 3466, "Student-t(0, 0.35, 3)", "Inv-Gamma(1.46, 0.34)"),
    ("ENT", 17, 243, 10, 136, "Student-t(0, 0.81, 4)", "Inv-Gamma(1.73, 0.71)"),
    ("Epilepsy", 114, 2052, 39, 839, "Student-t(0, 0.88, 6)", "Inv-Gamma(1.71, 0.43)"),
    ("Eyes and Vision", 57, 1007, 41, 815, "Student-t(0, 0.77, 5)", "Inv-Gamma(2.09, 0.94)"),
    ("Fertility Regulation", 62, 1072, 46, 818, "Student-t(0, 0.46, 5)", "Inv-Gamma(2.21, 0.71)"),
    ("Gut", 314, 6056, 215, 4595, "Student-t(0, 0.63, 5)", "Inv-Gamma(1.94, 0.62)"),
    ("Gynaecological, Neuro-oncology and Orphan Cancer", 245, 5811, 159, 4123, "Student-t(0, 0.53, 4)", "Inv-Gamma(1.80, 0.56)"),
    ("Gynaecology and Fertility", 364, 6896, 185, 3714, "Student-t(0, 0.40, 2)", "Inv-Gamma(1.24, 0.28)"),
    ("Haematology", 155, 4546, 101, 3080, "Student-t(0, 0.57, 4)", "Inv-Gamma(2.91, 0.66)"),
    ("Heart", 979, 20760, 579, 14085, "Student-t(0, 0.20, 2)", "Inv-Gamma(1.64, 0.29)"),
    ("Heart; Vascular", 8, 178, 7, 166, "Student-t(0, 0.95, 4)", "Inv-Gamma(1.64, 0.83)"),
    ("Hepato-Biliary", 1042, 36665, 706, 25668, "Student-t(0, 0.43, 3)", "Inv-Gamma(1.58, 0.40)"),
    ("HIV/AIDS", 32, 475, 22, 293, "Student-t(0, 0.32, 4)", "Inv-Gamma(1.76, 0.36)"),
    ("Hypertension", 66, 1127, 28, 453, "Student-t(0, 0.28, 5)", "Inv-Gamma(1.25, 0.10)"),
    ("Incontinence", 78, 1479, 53, 1023, "Student-t(0, 0.75, 3)", "Inv-Gamma(2.07, 1.09)"),
    ("Infectious Diseases", 361, 6619, 251, 4787, "Student-t(0, 0.66, 3)", "Inv-Gamma(2.08, 0.86)"),
    ("Injuries", 214, 5662, 143, 4182, "Student-t(0, 0.60, 4)", "Inv-Gamma(1.52, 0.49)"),
    ("Kidney and Transplant", 479, 8828, 274, 5226, "Student-t(0, 0.53, 4)", "Inv-Gamma(1.68, 0.44)"),
    ("Lung Cancer", 76, 1416, 68, 1294, "Student-t(0, 0.61, 5)", "Inv-Gamma(2.04, 0.68)"),
    ("Metabolic and Endocrine Disorders", 130, 3092, 78, 2190, "Student-t(0, 0.29, 2)", "Inv-Gamma(0.92, 0.11)"),
    ("Methodology", 74, 2098, 69, 1997, "Student-t(0, 0.60, 5)", "Inv-Gamma(2.04, 0.50)"),
    ("Movement Disorders", 59, 1058, 35, 708, "Student-t(0, 0.73, 5)", "Inv-Gamma(2.14, 0.64)"),
    ("Multiple Sclerosis and Rare Diseases of the CNS", 29, 564, 23, 487, "Student-t(0, 0.76, 4)", "Inv-Gamma(2.09, 0.71)"),
    ("Musculoskeletal", 139, 2403, 92, 1686, "Student-t(0, 0.59, 4)", "Inv-Gamma(1.76, 0.59)"),
    ("Neonatal", 337, 6327, 153, 2738, "Student-t(0, 0.29, 3)", "Inv-Gamma(1.80, 0.42)"),
    ("Neuromuscular", 43, 739, 20, 331, "Student-t(0, 0.70, 5)", "Inv-Gamma(1.74, 0.49)"),
    ("Oral Health", 63, 990, 45, 724, "Student-t(0, 1.13, 4)", "Inv-Gamma(1.85, 0.70)"),
    ("Pain, Palliative and Supportive Care", 315, 6062, 204, 4292, "Student-t(0, 1.00, 7)", "Inv-Gamma(1.50, 0.40)"),
    ("Pregnancy and Childbirth", 1307, 24397, 832, 16588, "Student-t(0, 0.38, 2)", "Inv-Gamma(1.73, 0.47)"),
    ("Schizophrenia", 609, 13515, 405, 9919, "Student-t(0, 0.58, 4)", "Inv-Gamma(1.92, 0.69)"),
    ("Sexually Transmitted Infections", 25, 318, 19, 236, "Student-t(0, 0.61, 2)", "Inv-Gamma(1.72, 0.47)"),
    ("Skin", 142, 2309, 76, 1294, "Student-t(0, 0.81, 2)", "Inv-Gamma(1.64, 0.49)"),
    ("Stroke", 299, 5310, 131, 2357, "Student-t(0, 0.22, 2)", "Inv-Gamma(1.36, 0.21)"),
    ("Tobacco Addiction", 213, 4990, 168, 4079, "Student-t(0, 0.49, 5)", "Inv-Gamma(2.51, 0.63)"),
    ("Urology", 89, 1673, 60, 1271, "Student-t(0, 0.82, 5)", "Inv-Gamma(1.72, 0.50)"),
    ("Vascular", 187, 2590, 116, 1711, "Student-t(0, 0.68, 5)", "Inv-Gamma(1.70, 0.45)"),
    ("Work", 14, 208, 11, 178, "Student-t(0, 0.59, 4)", "Inv-Gamma(1.79, 0.73)"),
    ("Wounds", 75, 1169, 53, 888, "Student-t(0, 0.60, 4)", "Inv-Gamma(2.16, 0.86)"),
    ("Pooled Estimate", 11964, 253054, 7478, 170628, "Student-t(0, 0.58, 4)", "Inv-Gamma(1.77, 0.55)"),
)

LOG_RR_ROWS: tuple[Row, ...] = (
    ("Acute Respiratory Infections", 299, 5721, 178, 3806, "Student-t(0, 0.27, 3)", "Inv-Gamma(1.58, 0.25)"),
    ("Airways", 449, 8806, 207, 3723, "Student-t(0, 0.25, 3)", "Inv-Gamma(1.36, 0.15)"),
    ("Anaesthesia", 409, 9471, 231, 6158, "Student-t(0, 0.45, 5)", "Inv-Gamma(1.21, 0.21)"),
    ("Back and Neck", 14, 295, 8, 186, "Student-t(0, 0.34, 3)", "Inv-Gamma(1.52, 0.22)"),
    ("Bone, Joint and Muscle Trauma", 198, 3616, 86, 1455, "Student-t(0, 0.26, 2)", "Inv-Gamma(0.97, 0.14)"),
    ("Breast Cancer", 136, 2622, 115, 2291, "Student-t(0, 0.21, 3)", "Inv-Gamma(1.49, 0.24)"),
    ("Childhood Cancer", 1, 13, None, None, "Student-t(0, 0.28, 3)", None),
    ("Colorectal", 235, 4157, 133, 2523, "Student-t(0, 0.38, 4)", "Inv-Gamma(1.42, 0.27)"),
    ("Common Mental Disorders", 640, 13175, 425, 9704, "Student-t(0, 0.29, 3)", "Inv-Gamma(1.43, 0.20)"),
    ("Consumers and Communication", 44, 918, 40, 865, "Student-t(0, 0.13, 2)", "Inv-Gamma(1.48, 0.14)"),
    ("Cystic Fibrosis and Genetic Disorders", 76, 1692, 31, 736, "Student-t(0, 0.21, 2)", "Inv-Gamma(1.71, 0.24)"),
    ("Dementia and Cognitive Improvement", 124, 2047, 72, 1199, "Student-t(0, 0.29, 3)", "Inv-Gamma(1.53, 0.19)"),
    ("Developmental, Psychosocial and Learning Problems", 107, 1467, 85, 1162, "Student-t(0, 0.39, 3)", "Inv-Gamma(0.97, 0.11)"),
    ("Drugs and Alcohol", 105, 2019, 66, 1376, "Student-t(0, 0.22, 4)", "Inv-Gamma(1.58, 0.20)"),
    ("Effective Practice and Organisation of Care", 58, 1093, 46, 904, "Student-t(0, 0.30, 4)", "Inv-Gamma(1.40, 0.24)"),
    ("Emergency and Critical Care", 232, 4776, 145, 3438, "Student-t(0, 0.19, 2)", "Inv-Gamma(1.65, 0.25)"),
    ("ENT", 16, 233, 5, 63, "Student-t(0, 0.40, 4)", "Inv-Gamma(1.50, 0.24)"),
    ("Epilepsy", 116, 2064, 49, 1090, "Student-t(0, 0.58, 5)", "Inv-Gamma(1.74, 0.27)"),
    ("Eyes and Vision", 57, 984, 38, 719, "Student-t(0, 0.34, 4)", "Inv-Gamma(1.60, 0.26)"),
    ("Fertility Regulation", 60, 1032, 42, 744, "Student-t(0, 0.34, 4)", "Inv-Gamma(1.59, 0.31)"),
    ("Gut", 308, 5941, 202, 4348, "Student-t(0, 0.40, 4)", "Inv-Gamma(1.69, 0.29)"),
    ("Gynaecological, Neuro-oncology and Orphan Cancer", 242, 5784, 154, 3988, "Student-t(0, 0.35, 4)", "Inv-Gamma(1.43, 0.25)"),
    ("Gynaecology and Fertility", 373, 6967, 181, 3666, "Student-t(0, 0.25, 2)", "Inv-Gamma(1.29, 0.16)"),
    ("Haematology", 153, 4472, 95, 2958, "Student-t(0, 0.31, 3)", "Inv-Gamma(1.22, 0.11)"),
    ("Heart", 950, 19836, 604, 13252, "Student-t(0, 0.17, 3)", "Inv-Gamma(1.96, 0.24)"),
    ("Heart; Vascular", 8, 178, 7, 166, "Student-t(0, 0.39, 3)", "Inv-Gamma(1.62, 0.25)"),
    ("Hepato-Biliary", 1037, 36554, 578, 21332, "Student-t(0, 0.23, 3)", "Inv-Gamma(1.44, 0.19)"),
    ("HIV/AIDS", 33, 486, 17, 228, "Student-t(0, 0.21, 3)", "Inv-Gamma(1.66, 0.23)"),
    ("Hypertension", 66, 1127, 33, 515, "Student-t(0, 0.25, 4)", "Inv-Gamma(1.48, 0.11)"),
    ("Incontinence", 78, 1479, 54, 1020, "Student-t(0, 0.39, 3)", "Inv-Gamma(1.53, 0.33)"),
    ("Infectious Diseases", 358, 6490, 254, 4813, "Student-t(0, 0.41, 3)", "Inv-Gamma(1.30, 0.27)"),
    ("Injuries", 214, 5639, 138, 3839, "Student-t(0, 0.27, 4)", "Inv-Gamma(1.46, 0.19)"),
    ("Kidney and Transplant", 474, 8737, 275, 5205, "Student-t(0, 0.35, 4)", "Inv-Gamma(1.51, 0.23)"),
    ("Lung Cancer", 75, 1402, 64, 1131, "Student-t(0, 0.38, 4)", "Inv-Gamma(1.49, 0.26)"),
    ("Metabolic and Endocrine Disorders", 131, 3233, 72, 1768, "Student-t(0, 0.13, 1)", "Inv-Gamma(1.55, 0.19)"),
    ("Methodology", 74, 2098, 73, 2084, "Student-t(0, 0.27, 5)", "Inv-Gamma(1.74, 0.23)"),
    ("Movement Disorders", 58, 1042, 40, 765, "Student-t(0, 0.46, 4)", "Inv-Gamma(1.54, 0.24)"),
    ("Multiple Sclerosis and Rare Diseases of the CNS", 28, 544, 22, 467, "Student-t(0, 0.44, 3)", "Inv-Gamma(1.58, 0.35)"),
    ("Musculoskeletal", 138, 2393, 84, 1541, "Student-t(0, 0.33, 3)", "Inv-Gamma(1.54, 0.31)"),
    ("Neonatal", 335, 6207, 151, 2517, "Student-t(0, 0.18, 3)", "Inv-Gamma(1.89, 0.30)"),
    ("Neuromuscular", 40, 647, 18, 273, "Student-t(0, 0.41, 4)", "Inv-Gamma(1.44, 0.15)"),
    ("Oral Health", 66, 1032, 32, 465, "Student-t(0, 0.55, 4)", "Inv-Gamma(1.50, 0.37)"),
    ("Pain, Palliative and Supportive Care", 310, 5965, 212, 4298, "Student-t(0, 0.59, 5)", "Inv-Gamma(1.98, 0.39)"),
    ("Pregnancy and Childbirth", 1300, 24223, 813, 16138, "Student-t(0, 0.24, 2)", "Inv-Gamma(1.40, 0.21)"),
    ("Schizophrenia", 601, 13147, 347, 8290, "Student-t(0, 0.33, 3)", "Inv-Gamma(1.47, 0.26)"),
    ("Sexually Transmitted Infections", 25, 318, 18, 225, "Student-t(0, 0.39, 3)", "Inv-Gamma(1.43, 0.21)"),
    ("Skin", 142, 2285, 85, 1434, "Student-t(0, 0.41, 1)", "Inv-Gamma(1.49, 0.23)"),
    ("Stroke", 301, 5363, 149, 2476, "Student-t(0, 0.13, 2)", "Inv-Gamma(1.52, 0.15)"),
    ("Tobacco Addiction", 215, 5018, 174, 4276, "Student-t(0, 0.36, 5)", "Inv-Gamma(2.02, 0.36)"),
    ("Urology", 89, 1694, 62, 1309, "Student-t(0, 0.44, 3)", "Inv-Gamma(1.37, 0.18)"),
    ("Vascular", 176, 2473, 96, 1383, "Student-t(0, 0.43, 5)", "Inv-Gamma(1.26, 0.19)"),
    ("Work", 14, 208, 10, 166, "Student-t(0, 0.23, 3)", "Inv-Gamma(1.50, 0.26)"),
    ("Wounds", 74, 1148, 43, 688, "Student-t(0, 0.37, 4)", "Inv-Gamma(1.63, 0.38)"),
    ("Pooled Estimate", 11862, 250331, 7159, 159166, "Student-t(0, 0.32, 3)", "Inv-Gamma(1.51, 0.23)"),
)

RD_ROWS: tuple[Row, ...] = (
    ("Acute Respiratory Infections", 308, 5857, 152, 3184, "Student-t(0, 0.01, 1)", "Normal+(0, 0.10)"),
    ("Airways", 458, 8950, 175, 3107, "Student-t(0, 0.01, 1)", "Normal+(0, 0.10)"),
    ("Anaesthesia", 413, 9585, 234, 5983, "Student-t(0, 0.02, 1)", "Normal+(0, 0.11)"),
    ("Back and Neck", 14, 295, 10, 212, "Student-t(0, 0.06, 2)", "Normal+(0, 0.10)"),
    ("Bone, Joint and Muscle Trauma", 206, 3781, 86, 1476, "Student-t(0, 0.01, 1)", "Normal+(0, 0.12)"),
    ("Breast Cancer", 137, 2646, 105, 2143, "Student-t(0, 0.05, 2)", "Normal+(0, 0.12)"),
    ("Childhood Cancer", 1, 13, None, None, "Student-t(0, 0.02, 1)", None),
    ("Colorectal", 238, 4266, 132, 2417, "Student-t(0, 0.01, 1)", "Normal+(0, 0.10)"),
    ("Common Mental Disorders", 650, 13334, 455, 9880, "Student-t(0, 0.05, 1)", "Normal+(0, 0.11)"),
    ("Consumers and Communication", 44, 918, 42, 895, "Student-t(0, 0.06, 2)", "Normal+(0, 0.10)"),
    ("Cystic Fibrosis and Genetic Disorders", 82, 1858, 31, 786, "Student-t(0, 0.01, 1)", "Normal+(0, 0.09)"),
    ("Dementia and Cognitive Improvement", 126, 2086, 67, 1038, "Student-t(0, 0.02, 1)", "Normal+(0, 0.09)"),
    ("Developmental, Psychosocial and Learning Problems", 107, 1467, 96, 1322, "Student-t(0, 0.08, 2)", "Normal+(0, 0.13)"),
    ("Drugs and Alcohol", 107, 2065, 70, 1445, "Student-t(0, 0.02, 1)", "Normal+(0, 0.10)"),
    ("Effective Practice and Organisation of Care", 59, 1106, 45, 892, "Student-t(0, 0.06, 2)", "Normal+(0, 0.11)"),
    ("Emergency and Critical Care", 233, 4803, 144, 3207, "Student-t(0, 0.02, 1)", "Normal+(0, 0.07)"),
    ("ENT", 17, 243, 9, 116, "Student-t(0, 0.04, 1)", "Normal+(0, 0.12)"),
    ("Epilepsy", 117, 2085, 67, 1355, "Student-t(0, 0.05, 2)", "Normal+(0, 0.09)"),
    ("Eyes and Vision", 58, 1017, 38, 666, "Student-t(0, 0.04, 1)", "Normal+(0, 0.11)"),
    ("Fertility Regulation", 62, 1072, 34, 562, "Student-t(0, 0.01, 1)", "Normal+(0, 0.08)"),
    ("Gut", 313, 6032, 193, 3834, "Student-t(0, 0.05, 2)", "Normal+(0, 0.09)"),
    ("Gynaecological, Neuro-oncology and Orphan Cancer", 244, 5799, 152, 3988, "Student-t(0, 0.02, 1)", "Normal+(0, 0.10)"),
    ("Gynaecology and Fertility", 375, 7017, 204, 3929, "Student-t(0, 0.02, 1)", "Normal+(0, 0.09)"),
    ("Haematology", 155, 4546, 82, 2740, "Student-t(0, 0.05, 1)", "Normal+(0, 0.09)"),
    ("Heart", 974, 20489, 343, 6737, "Student-t(0, 0.00, 1)", "Normal+(0, 0.07)"),
    ("Heart; Vascular", 8, 178, 8, 178, "Student-t(0, 0.08, 1)", "Normal+(0, 0.12)"),
    ("Hepato-Biliary", 1051, 36811, 498, 14308, "Student-t(0, 0.01, 1)", "Normal+(0, 0.09)"),
    ("HIV/AIDS", 34, 501, 17, 227, "Student-t(0, 0.02, 2)", "Normal+(0, 0.10)"),
    ("Hypertension", 66, 1127, 13, 218, "Student-t(0, 0.01, 2)", "Normal+(0, 0.06)"),
    ("Incontinence", 78, 1479, 61, 1183, "Student-t(0, 0.06, 2)", "Normal+(0, 0.12)"),
    ("Infectious Diseases", 361, 6614, 228, 4141, "Student-t(0, 0.02, 1)", "Normal+(0, 0.10)"),
    ("Injuries", 217, 5692, 128, 3529, "Student-t(0, 0.01, 0)", "Normal+(0, 0.14)"),
    ("Kidney and Transplant", 481, 8837, 281, 5436, "Student-t(0, 0.03, 1)", "Normal+(0, 0.09)"),
    ("Lung Cancer", 76, 1416, 65, 1284, "Student-t(0, 0.06, 2)", "Normal+(0, 0.12)"),
    ("Metabolic and Endocrine Disorders", 131, 3251, 56, 1277, "Student-t(0, 0.00, 0)", "Normal+(0, 0.09)"),
    ("Methodology", 74, 2098, 73, 2084, "Student-t(0, 0.10, 2)", "Normal+(0, 0.10)"),
    ("Movement Disorders", 59, 1058, 48, 906, "Student-t(0, 0.06, 2)", "Normal+(0, 0.07)"),
    ("Multiple Sclerosis and Rare Diseases of the CNS", 29, 564, 24, 484, "Student-t(0, 0.07, 2)", "Normal+(0, 0.10)"),
    ("Musculoskeletal", 139, 2403, 80, 1269, "Student-t(0, 0.01, 1)", "Normal+(0, 0.11)"),
    ("Neonatal", 339, 6383, 163, 2667, "Student-t(0, 0.02, 1)", "Normal+(0, 0.09)"),
    ("Neuromuscular", 43, 739, 23, 395, "Student-t(0, 0.03, 1)", "Normal+(0, 0.08)"),
    ("Oral Health", 68, 1055, 39, 541, "Student-t(0, 0.03, 1)", "Normal+(0, 0.12)"),
    ("Pain, Palliative and Supportive Care", 312, 6018, 229, 4148, "Student-t(0, 0.11, 2)", "Normal+(0, 0.11)"),
    ("Pregnancy and Childbirth", 1310, 24437, 724, 14321, "Student-t(0, 0.01, 1)", "Normal+(0, 0.08)"),
    ("Schizophrenia", 614, 13574, 400, 9463, "Student-t(0, 0.03, 1)", "Normal+(0, 0.10)"),
    ("Sexually Transmitted Infections", 25, 318, 16, 199, "Student-t(0, 0.04, 1)", "Normal+(0, 0.12)"),
    ("Skin", 145, 2347, 99, 1580, "Student-t(0, 0.03, 1)", "Normal+(0, 0.12)"),
    ("Stroke", 303, 5390, 132, 2230, "Student-t(0, 0.01, 1)", "Normal+(0, 0.06)"),
    ("Tobacco Addiction", 216, 5031, 174, 4324, "Student-t(0, 0.04, 2)", "Normal+(0, 0.07)"),
    ("Urology", 91, 1728, 67, 1357, "Student-t(0, 0.04, 1)", "Normal+(0, 0.10)"),
    ("Vascular", 185, 2570, 85, 1224, "Student-t(0, 0.01, 1)", "Normal+(0, 0.12)"),
    ("Work", 14, 208, 9, 144, "Student-t(0, 0.06, 2)", "Normal+(0, 0.12)"),
    ("Wounds", 75, 1169, 43, 702, "Student-t(0, 0.01, 1)", "Normal+(0, 0.09)"),
    ("Pooled Estimate", 12042, 254326, 6749, 141733, "Student-t(0, 0.03, 1)", "Normal+(0, 0.10)"),
)

# Time-to-event outcomes: only a general (pooled) prior is published,
# fitted by maximum likelihood; no separate heterogeneity sample counts.
LOG_HR_ROWS: tuple[Row, ...] = (
    ("Pooled Estimate", 225, 3707, None, None, "Student-t(0, 0.13, 2)", "Inv-Gamma(2.42, 0.30)"),
)

# RD rows whose printed Student-t parameters are rounded to zero (scale
# and/or df); stored verbatim, refused at analysis time by PriorSpec.validate.
RD_DEGENERATE_TOPICS = (
    "Heart",
    "Injuries",
    "Metabolic and Endocrine Disorders",
)

# Training-set candidate families per measure: (mu candidates, tau candidates).
# The first log OR pair is the transformed continuous-outcome prior.
CANDIDATES: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {
    "logOR": (
        ("Student-t(0, 0.78, 5)", "Normal(0, 0.81)", "Student-t(0, 0.45, 2.38)"),
        ("Inv-Gamma(1.71, 0.73)", "Normal+(0, 0.62)", "Inv-Gamma(1.53, 0.40)", "Gamma(1.99, 0.25)"),
    ),
    "logRR": (
        ("Normal(0, 0.49)", "Student-t(0, 0.26, 2.28)"),
        ("Normal+(0, 0.35)", "Inv-Gamma(1.51, 0.23)", "Gamma(1.96, 0.14)"),
    ),
    "RD": (
        ("Normal(0, 0.10)", "Student-t(0, 0.02, 0.85)"),
        ("Normal+(0, 0.10)", "Inv-Gamma(1.68, 0.07)", "Gamma(1.80, 0.04)"),
    ),
    "logHR": (
        ("Normal(0, 0.35)", "Student-t(0, 0.21, 2.57)"),
        ("Normal+(0, 0.26)", "Inv-Gamma(1.80, 0.21)", "Gamma(1.93, 0.11)"),
    ),
}

# SHA-256 over the canonical serialization of every table above.
# Regenerate with prior_registry.registry_checksum() after a deliberate edit.
REGISTRY_SHA256 = "ff7ede4c34e15d77941fe53d84e8be5ce16db547b811de77791007b0a58d6ae0"
