// expect: reported=1 refuted=1 kind=infeasible
unsigned int mask(unsigned int x) {
  unsigned int d = 0;
  if ((x & 4) != 0 && ((x ^ 4) & 4) != 0)
    return 100 / d;
  return 1;
}
