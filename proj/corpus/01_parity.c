// expect: reported=1 refuted=1 kind=infeasible
unsigned int func(unsigned int a) {
  unsigned int *z = 0;
  if ((a & 1) && ((a & 1) ^ 1))
    return *z;
  return 0;
}
