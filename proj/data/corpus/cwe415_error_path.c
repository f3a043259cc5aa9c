#include <stdlib.h>
#include <string.h>

int process(const char *input)
{
    char *copy = malloc(strlen(input) + 1);
    if (copy == NULL)
        return -1;
    strcpy(copy, input);
    if (copy[0] == '#') {
        /* comment lines are dropped early */
        free(copy);
    }
    free(copy);
    return 0;
}

int main(void)
{
    return process("#comment");
}
