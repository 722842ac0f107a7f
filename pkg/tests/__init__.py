# Test suite for the pseudoforest-minors toolkit
