"""Static transcriptions of the 32-point approximate DFT matrix and its factors.

Each matrix is stored row by row, one character per entry::

    0 -> 0      1 -> 1      - -> -1
    j -> j      J -> -j
    g -> 1+j    G -> -1-j
    c -> 1-j    C -> -1+j

``F32HAT`` is the approximate DFT matrix; ``STAGES`` holds W1..W8 in the
order they act on the input (W1 first).
"""

F32HAT = (
    "11111111111111111111111111111111",
    "111cccJJJJJGGG-----CCCjjjjjggg11",
    "11cJJJG---Cjjjg111cJJJG---Cjjjg1",
    "1cJJG--Cjg11cJJG-Cjjg11cJG--Cjjg",
    "1cJG-Cjg1cJG-Cjg1cJG-Cjg1cJG-Cjg",
    "1cJ-Cj1cJG-jg1JG-Cj1cJ-Cjg1JG-jg",
    "1JG-j1cJ-jg1J-Cj1JG-j1cJ-jg1J-Cj",
    "1J-CgcJ-j1JGCg1J-j1cGCj1J-jgcG-j",
    "1J-j1J-j1J-j1J-j1J-j1J-j1J-j1J-j",
    "1J-gcGj1J-jcGC1J-j1GCgJ-j1JCgc-j",
    "1JC1J-gJ-jc-j1Gj1JC1J-gJ-jc-j1Gj",
    "1Gj1Gj1Gjc-jc-jc-gJ-gJ-gJC1JC1JC",
    "1Gjc-gJC1Gjc-gJC1Gjc-gJC1Gjc-gJC",
    "1GjJC1-gJC1-gJjc-gJjc-1Gjc-1GjJC",
    "1-gJjJC1-1GjJjc-1-gJjJC1-1GjJjc-",
    "1-1GgGjJjJjcCc-1-1-gGgJjJjJCcC1-",
    "1-1-1-1-1-1-1-1-1-1-1-1-1-1-1-1-",
    "1-1CcCJjJjJgGg-1-1-cCcjJjJjGgG1-",
    "1-cjJjG1-1CJjJg-1-cjJjG1-1CJjJg-",
    "1CJjG1-cjG1-cjJg-cjJg-1CJg-1CJjG",
    "1CJg-cjG1CJg-cjG1CJg-cjG1CJg-cjG",
    "1CJ1CJ1CJg-Jg-Jg-cj-cj-cjG1jG1jG",
    "1jG1j-cj-Jg-J1CJ1jG1j-cj-Jg-J1CJ",
    "1j-cgCJ1j-JgCG1j-J1CGcj-J1jGcg-J",
    "1j-J1j-J1j-J1j-J1j-J1j-J1j-J1j-J",
    "1j-Gcgj-J1jCGc1j-J1gCGJ1j-JcgC-J",
    "1jC-J1gj-Jc1j-GJ1jC-J1gj-Jc1j-GJ",
    "1gj-GJ1gjC-Jc1jC-GJ1gj-GJc1jC-Jc",
    "1gjC-GJc1gjC-GJc1gjC-GJc1gjC-GJc",
    "1gjjC--GJc11gjjC-GJJc11gjC--GJJc",
    "11gjjjC---GJJJc111gjjjC---GJJJc1",
    "111gggjjjjjCCC-----GGGJJJJJccc11",
)

W1 = (
    "10000000000000001000000000000000",
    "01000000000000010000000000000000",
    "00100000000000100000000000000000",
    "00010000000001000000000000000000",
    "00001000000010000000000000000000",
    "00000100000100000000000000000000",
    "00000010001000000000000000000000",
    "00000001010000000000000000000000",
    "00000000100000000000000000000000",
    "000000010-0000000000000000000000",
    "0000001000-000000000000000000000",
    "00000100000-00000000000000000000",
    "000010000000-0000000000000000000",
    "0001000000000-000000000000000000",
    "00100000000000-00000000000000000",
    "010000000000000-0000000000000000",
    "1000000000000000-000000000000000",
    "00000000000000000100000000000001",
    "00000000000000000010000000000010",
    "00000000000000000001000000000100",
    "00000000000000000000100000001000",
    "00000000000000000000010000010000",
    "00000000000000000000001000100000",
    "00000000000000000000000101000000",
    "00000000000000000000000010000000",
    "0000000000000000000000010-000000",
    "00000000000000000000001000-00000",
    "000000000000000000000100000-0000",
    "0000000000000000000010000000-000",
    "00000000000000000001000000000-00",
    "000000000000000000100000000000-0",
    "0000000000000000010000000000000-",
)

W2 = (
    "10000000000000000000000000000000",
    "01000000000000000100000000000000",
    "00100000000000000010000000000000",
    "00010000000000000001000000000000",
    "00001000000000000000100000000000",
    "00000100000000000000010000000000",
    "00000010000000000000001000000000",
    "00000001000000000000000100000000",
    "00000000100000000000000010000000",
    "00000000010000000000000001000000",
    "00000000001000000000000000100000",
    "00000000000100000000000000010000",
    "00000000000010000000000000001000",
    "00000000000001000000000000000100",
    "00000000000000100000000000000010",
    "00000000000000010000000000000001",
    "00000000000000001000000000000000",
    "01000000000000000-00000000000000",
    "001000000000000000-0000000000000",
    "0001000000000000000-000000000000",
    "00001000000000000000-00000000000",
    "000001000000000000000-0000000000",
    "0000001000000000000000-000000000",
    "00000001000000000000000-00000000",
    "000000001000000000000000-0000000",
    "0000000001000000000000000-000000",
    "00000000001000000000000000-00000",
    "000000000001000000000000000-0000",
    "0000000000001000000000000000-000",
    "00000000000001000000000000000-00",
    "000000000000001000000000000000-0",
    "0000000000000001000000000000000-",
)

W3 = (
    "10000000100000000000000000000000",
    "01000001000000000000000000000000",
    "00100010000000000000000000000000",
    "00010100000000000000000000000000",
    "00001000000000000000000000000000",
    "00010-00000000000000000000000000",
    "001000-0000000000000000000000000",
    "0100000-000000000000000000000000",
    "10000000-00000000000000000000000",
    "00000000010000010000000000000000",
    "00000000001000100000000000000000",
    "00000000000101000000000000000000",
    "00000000000010000000000000000000",
    "0000000000010-000000000000000000",
    "00000000001000-00000000000000000",
    "000000000100000-0000000000000000",
    "00000000000000001000000000000000",
    "00000000000000000100000000000000",
    "00000000000000000010000000000000",
    "00000000000000000001000000000000",
    "00000000000000000000100000000000",
    "00000000000000000000010000000000",
    "00000000000000000000001000000000",
    "00000000000000000000000100000000",
    "00000000000000000000000010000000",
    "00000000000000000000000001000000",
    "00000000000000000000000000100000",
    "00000000000000000000000000010000",
    "00000000000000000000000000001000",
    "00000000000000000000000000000100",
    "00000000000000000000000000000010",
    "00000000000000000000000000000001",
)

W4 = (
    "10001000000000000000000000000000",
    "01010000000000000000000000000000",
    "00100000000000000000000000000000",
    "010-0000000000000000000000000000",
    "1000-000000000000000000000000000",
    "00000100000000000000000000000000",
    "00000010100000000000000000000000",
    "00000001000000000000000000000000",
    "00000010-00000000000000000000000",
    "00000000010000000000000000000000",
    "00000000001010000000000000000000",
    "00000000000100000000000000000000",
    "000000000010-0000000000000000000",
    "00000000000001010000000000000000",
    "00000000000000100000000000000000",
    "000000000000010-0000000000000000",
    "00000000000000001000000000001000",
    "00000000000000000100000000000000",
    "00000000000000000010000000000000",
    "00000000000000000001000000000000",
    "00000000000000000000100010000000",
    "00000000000000000000010000000000",
    "00000000000000000000001000000000",
    "00000000000000000000000100000000",
    "000000000000000000001000-0000000",
    "00000000000000000000000001000000",
    "00000000000000000000000000100000",
    "00000000000000000000000000010000",
    "0000000000000000100000000000-000",
    "00000000000000000000000000000100",
    "00000000000000000000000000000010",
    "00000000000000000000000000000001",
)

W5 = (
    "10100000000000000000000000000000",
    "01000000000000000000000000000000",
    "10-00000000000000000000000000000",
    "00011000000000000000000000000000",
    "0001-000000000000000000000000000",
    "00000100100000000000000000000000",
    "00000011000000000000000000000000",
    "0000001-000000000000000000000000",
    "00000100-00000000000000000000000",
    "00000000010010000000000000000000",
    "00000000001100000000000000000000",
    "00000000001-00000000000000000000",
    "000000000100-0000000000000000000",
    "00000000000001100000000000000000",
    "00000000000001-00000000000000000",
    "00000000000000010000000000000000",
    "0000000000000000-000000000000010",
    "00000000000000000100000000000000",
    "00000000000000000010000010000000",
    "00000000000000000001010100000000",
    "00000000000000000000101000000000",
    "000000000000000000010-0000000000",
    "0000000000000000000010-000000000",
    "00000000000000000001000-00000000",
    "000000000000000000100000-0000000",
    "00000000000000000000000001000000",
    "00000000000000000000000000101000",
    "00000000000000000000000000010101",
    "0000000000000000000000000010-000",
    "00000000000000000000000000010-00",
    "00000000000000001000000000000010",
    "0000000000000000000000000001000-",
)

W6 = (
    "11000000000000000000000000000000",
    "1-000000000000000000000000000000",
    "00100000000000000000000000000000",
    "00010000000000000000000000000000",
    "00001000000000000000000000000000",
    "00000100000000000000000000000000",
    "00000010000000000000000000000000",
    "00000001000000000000000000000000",
    "00000000100000000000000000000000",
    "00000000010000000000000000000000",
    "00000000001000000000000000000000",
    "00000000000100000000000000000000",
    "00000000000010000000000000000000",
    "00000000000001000000000000000000",
    "00000000000000100000000000000000",
    "00000000000000010000000000000000",
    "00000000000000001000000000000000",
    "00000000000000000100010-00000000",
    "00000000000000000010000000000000",
    "00000000000000000001100000000000",
    "00000000000000000001-00000000000",
    "000000000000000001000-0000000000",
    "00000000000000000000001000000000",
    "00000000000000000100000100000000",
    "00000000000000000000000010000000",
    "0000000000000000000000000100010-",
    "00000000000000000000000000100000",
    "00000000000000000000000000010010",
    "00000000000000000000000000001000",
    "00000000000000000000000001000-00",
    "000000000000000000000000000100-0",
    "00000000000000000000000001000001",
)

W7 = (
    "10000000000000000000000000000000",
    "01000000000000000000000000000000",
    "00100000000000000000000000000000",
    "00010000000000000000000000000000",
    "00001000000000000000000000000000",
    "00000100000000000000000000000000",
    "00000010000000000000000000000000",
    "00000001000000000000000000000000",
    "00000000100000000000000000000000",
    "00000000010000000000000000000000",
    "00000000001000000000000000000000",
    "00000000000100000000000000000000",
    "00000000000010000000000000000000",
    "00000000000001000000000000000000",
    "00000000000000100000000000000000",
    "00000000000000010000000000000000",
    "00000000000000001000000000000100",
    "00000000000000000100000010000000",
    "000000000000000000-0000100000000",
    "00000000000000000001000000000000",
    "00000000000000000000100000000000",
    "00000000000000000000011000000000",
    "0000000000000000000001-000000000",
    "00000000000000000010000100000000",
    "000000000000000001000000-0000000",
    "00000000000000000000000001100000",
    "00000000000000000000000001-00000",
    "00000000000000000000000000010000",
    "00000000000000000000000000001001",
    "00000000000000001000000000000-00",
    "00000000000000000000000000000010",
    "0000000000000000000000000000100-",
)

W8 = (
    "10000000000000000000000000000000",
    "0000000000000000000J000000010000",
    "0000001000J000000000000000000000",
    "00000000000000000000000J0000-000",
    "0001000000000j000000000000000000",
    "00000000000000000J00000001000000",
    "00000-000J0000000000000000000000",
    "0000000000000000-00000J000000000",
    "001000000000000J0000000000000000",
    "000000000000000000000J0000000-00",
    "000000001000J0000000000000000000",
    "000000000000000000000000J0-00000",
    "0000-000000000j00000000000000000",
    "000000000000000000J000000000000-",
    "00000001000j00000000000000000000",
    "00000000000000000000J000000000-0",
    "01000000000000000000000000000000",
    "00000000000000000000j000000000-0",
    "00000001000J00000000000000000000",
    "000000000000000000j000000000000-",
    "0000-000000000J00000000000000000",
    "000000000000000000000000j0-00000",
    "000000001000j0000000000000000000",
    "000000000000000000000j0000000-00",
    "001000000000000j0000000000000000",
    "0000000000000000-00000j000000000",
    "00000-000j0000000000000000000000",
    "00000000000000000j00000001000000",
    "0001000000000J000000000000000000",
    "00000000000000000000000j0000-000",
    "0000001000j000000000000000000000",
    "0000000000000000000j000000010000",
)

STAGES = (W1, W2, W3, W4, W5, W6, W7, W8)
