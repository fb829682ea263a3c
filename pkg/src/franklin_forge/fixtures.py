"""Embedded reference squares, bit-exact as printed in their sources.

FIGURE1_FRANKLIN8  - the classical order-8 square with symbols 0..63 (p=2).
FIGURE2_MP8        - an order-8 type-2 most-perfect square.
FIGURE2_MP9        - an order-9 type-3 most-perfect square.
SEC14_FRANKLIN27   - an order-27 type-3 pandiagonal Franklin square.
"""

FIGURE1_FRANKLIN8 = (
    (51, 60, 3, 12, 19, 28, 35, 44),
    (13, 2, 61, 50, 45, 34, 29, 18),
    (52, 59, 4, 11, 20, 27, 36, 43),
    (10, 5, 58, 53, 42, 37, 26, 21),
    (54, 57, 6, 9, 22, 25, 38, 41),
    (8, 7, 56, 55, 40, 39, 24, 23),
    (49, 62, 1, 14, 17, 30, 33, 46),
    (15, 0, 63, 48, 47, 32, 31, 16),
)

FIGURE2_MP8 = (
    (0, 31, 48, 47, 56, 39, 8, 23),
    (59, 36, 11, 20, 3, 28, 51, 44),
    (6, 25, 54, 41, 62, 33, 14, 17),
    (61, 34, 13, 18, 5, 26, 53, 42),
    (7, 24, 55, 40, 63, 32, 15, 16),
    (60, 35, 12, 19, 4, 27, 52, 43),
    (1, 30, 49, 46, 57, 38, 9, 22),
    (58, 37, 10, 21, 2, 29, 50, 45),
)

FIGURE2_MP9 = (
    (0, 16, 23, 63, 79, 59, 45, 34, 41),
    (64, 80, 57, 46, 35, 39, 1, 17, 21),
    (47, 33, 40, 2, 15, 22, 65, 78, 58),
    (7, 14, 18, 70, 77, 54, 52, 32, 36),
    (71, 75, 55, 53, 30, 37, 8, 12, 19),
    (51, 31, 38, 6, 13, 20, 69, 76, 56),
    (5, 9, 25, 68, 72, 61, 50, 27, 43),
    (66, 73, 62, 48, 28, 44, 3, 10, 26),
    (49, 29, 42, 4, 11, 24, 67, 74, 60),
)

SEC14_FRANKLIN27 = (
    (0, 691, 401, 432, 151, 509, 621, 259, 212, 567, 286, 239, 27, 718, 347, 459, 97, 536, 405, 124, 563, 594, 313, 185, 54, 664, 374),
    (457, 140, 495, 646, 248, 198, 25, 680, 387, 52, 707, 333, 484, 86, 522, 592, 275, 225, 619, 302, 171, 79, 653, 360, 430, 113, 549),
    (635, 261, 196, 14, 693, 385, 446, 153, 493, 473, 99, 520, 581, 288, 223, 41, 720, 331, 68, 666, 358, 419, 126, 547, 608, 315, 169),
    (16, 698, 378, 448, 158, 486, 637, 266, 189, 583, 293, 216, 43, 725, 324, 475, 104, 513, 421, 131, 540, 610, 320, 162, 70, 671, 351),
    (437, 144, 511, 626, 252, 214, 5, 684, 403, 32, 711, 349, 464, 90, 538, 572, 279, 241, 599, 306, 187, 59, 657, 376, 410, 117, 565),
    (639, 250, 203, 18, 682, 392, 450, 142, 500, 477, 88, 527, 585, 277, 230, 45, 709, 338, 72, 655, 365, 423, 115, 554, 612, 304, 176),
    (23, 675, 394, 455, 135, 502, 644, 243, 205, 590, 270, 232, 50, 702, 340, 482, 81, 529, 428, 108, 556, 617, 297, 178, 77, 648, 367),
    (441, 160, 491, 630, 268, 194, 9, 700, 383, 36, 727, 329, 468, 106, 518, 576, 295, 221, 603, 322, 167, 63, 673, 356, 414, 133, 545),
    (628, 257, 207, 7, 689, 396, 439, 149, 504, 466, 95, 531, 574, 284, 234, 34, 716, 342, 61, 662, 369, 412, 122, 558, 601, 311, 180),
    (21, 676, 395, 453, 136, 503, 642, 244, 206, 588, 271, 233, 48, 703, 341, 480, 82, 530, 426, 109, 557, 615, 298, 179, 75, 649, 368),
    (442, 161, 489, 631, 269, 192, 10, 701, 381, 37, 728, 327, 469, 107, 516, 577, 296, 219, 604, 323, 165, 64, 674, 354, 415, 134, 543),
    (629, 255, 208, 8, 687, 397, 440, 147, 505, 467, 93, 532, 575, 282, 235, 35, 714, 343, 62, 660, 370, 413, 120, 559, 602, 309, 181),
    (1, 692, 399, 433, 152, 507, 622, 260, 210, 568, 287, 237, 28, 719, 345, 460, 98, 534, 406, 125, 561, 595, 314, 183, 55, 665, 372),
    (458, 138, 496, 647, 246, 199, 26, 678, 388, 53, 705, 334, 485, 84, 523, 593, 273, 226, 620, 300, 172, 80, 651, 361, 431, 111, 550),
    (633, 262, 197, 12, 694, 386, 444, 154, 494, 471, 100, 521, 579, 289, 224, 39, 721, 332, 66, 667, 359, 417, 127, 548, 606, 316, 170),
    (17, 696, 379, 449, 156, 487, 638, 264, 190, 584, 291, 217, 44, 723, 325, 476, 102, 514, 422, 129, 541, 611, 318, 163, 71, 669, 352),
    (435, 145, 512, 624, 253, 215, 3, 685, 404, 30, 712, 350, 462, 91, 539, 570, 280, 242, 597, 307, 188, 57, 658, 377, 408, 118, 566),
    (640, 251, 201, 19, 683, 390, 451, 143, 498, 478, 89, 525, 586, 278, 228, 46, 710, 336, 73, 656, 363, 424, 116, 552, 613, 305, 174),
    (15, 697, 380, 447, 157, 488, 636, 265, 191, 582, 292, 218, 42, 724, 326, 474, 103, 515, 420, 130, 542, 609, 319, 164, 69, 670, 353),
    (436, 146, 510, 625, 254, 213, 4, 686, 402, 31, 713, 348, 463, 92, 537, 571, 281, 240, 598, 308, 186, 58, 659, 375, 409, 119, 564),
    (641, 249, 202, 20, 681, 391, 452, 141, 499, 479, 87, 526, 587, 276, 229, 47, 708, 337, 74, 654, 364, 425, 114, 553, 614, 303, 175),
    (22, 677, 393, 454, 137, 501, 643, 245, 204, 589, 272, 231, 49, 704, 339, 481, 83, 528, 427, 110, 555, 616, 299, 177, 76, 650, 366),
    (443, 159, 490, 632, 267, 193, 11, 699, 382, 38, 726, 328, 470, 105, 517, 578, 294, 220, 605, 321, 166, 65, 672, 355, 416, 132, 544),
    (627, 256, 209, 6, 688, 398, 438, 148, 506, 465, 94, 533, 573, 283, 236, 33, 715, 344, 60, 661, 371, 411, 121, 560, 600, 310, 182),
    (2, 690, 400, 434, 150, 508, 623, 258, 211, 569, 285, 238, 29, 717, 346, 461, 96, 535, 407, 123, 562, 596, 312, 184, 56, 663, 373),
    (456, 139, 497, 645, 247, 200, 24, 679, 389, 51, 706, 335, 483, 85, 524, 591, 274, 227, 618, 301, 173, 78, 652, 362, 429, 112, 551),
    (634, 263, 195, 13, 695, 384, 445, 155, 492, 472, 101, 519, 580, 290, 222, 40, 722, 330, 67, 668, 357, 418, 128, 546, 607, 317, 168),
)

FIXTURE_TABLE = (
    ("figure1_franklin8", 2, FIGURE1_FRANKLIN8),
    ("figure2_mp8", 2, FIGURE2_MP8),
    ("figure2_mp9", 3, FIGURE2_MP9),
    ("sec14_franklin27", 3, SEC14_FRANKLIN27),
)
