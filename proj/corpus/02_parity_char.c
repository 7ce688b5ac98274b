// expect: reported=1 refuted=1 kind=infeasible
int parity(char c) {
  int *p = 0;
  if (c % 2 == 0 && c % 2 == 1)
    return *p;
  return 0;
}
