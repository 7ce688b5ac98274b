// expect: reported=2 refuted=1 kind=mixed
int mixed(char a, char b) {
  int *p = 0;
  int r = 0;
  if (a == 3)
    r = 10 / b;
  if ((a & 2) && (a & 1) && a == 0)
    r = *p;
  return r;
}
