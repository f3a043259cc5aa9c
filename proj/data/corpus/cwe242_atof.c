#include <stdio.h>
#include <stdlib.h>

double read_ratio(const char *arg)
{
    double r = atof(arg);
    if (r < 0.0)
        r = 0.0;
    return r;
}

int main(int argc, char **argv)
{
    if (argc > 1)
        printf("%f\n", read_ratio(argv[1]));
    return 0;
}
